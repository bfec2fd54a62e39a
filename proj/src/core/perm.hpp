#pragma once

#include <compare>
#include <string>
#include <vector>

#include "error.hpp"

namespace psh {

// Permutation of {0, ..., degree-1}, stored as the image array. Acts on the
// left: images()[x] is where x goes. compose(a, b) applies b first.
class Perm {
public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm compose(const Perm& other) const;  // (*this) after other
  Perm inverse() const;
  bool is_identity() const;

  auto operator<=>(const Perm&) const = default;

  std::string cycle_str() const;

private:
  std::vector<int> img_;
};

}  // namespace psh
