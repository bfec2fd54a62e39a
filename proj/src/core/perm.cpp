#include "perm.hpp"

namespace psh {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    require(v >= 0 && v < degree(), Errc::not_bijective, "image out of range");
    require(!seen[v], Errc::not_bijective, "repeated image");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      require(from >= 0 && from < degree && img[from] == from, Errc::not_bijective,
              "bad cycle notation");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& other) const {
  require(degree() == other.degree(), Errc::wrong_size, "degree mismatch");
  std::vector<int> img(degree());
  for (int x = 0; x < degree(); ++x) img[x] = img_[other.img_[x]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(degree());
  for (int x = 0; x < degree(); ++x) img[img_[x]] = x;
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::string Perm::cycle_str() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (int s = 0; s < degree(); ++s) {
    if (seen[s] || img_[s] == s) continue;
    out += "(";
    int x = s;
    bool first = true;
    do {
      if (!first) out += " ";
      out += std::to_string(x);
      seen[x] = true;
      x = img_[x];
      first = false;
    } while (x != s);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace psh
