#pragma once

#include <stdexcept>
#include <string>

namespace psh {

enum class Errc {
  invalid_argument,
  parse_error,
  cap_exceeded,
  not_bijective,
  not_homomorphism,
  not_surjective,
  not_closed,
  not_normal,
  not_nested,
  not_invariant,
  wrong_group,
  wrong_base,
  wrong_size,
  cocycle_violation,
  not_equivariant,
  solve_failed,
  not_k_fixed,
  max_len_exceeded,
  index_out_of_range,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::parse_error: return "parse error";
    case Errc::cap_exceeded: return "cap exceeded";
    case Errc::not_bijective: return "not bijective";
    case Errc::not_homomorphism: return "not a homomorphism";
    case Errc::not_surjective: return "not surjective";
    case Errc::not_closed: return "not closed";
    case Errc::not_normal: return "not normal";
    case Errc::not_nested: return "not nested";
    case Errc::not_invariant: return "not invariant";
    case Errc::wrong_group: return "wrong group";
    case Errc::wrong_base: return "wrong base";
    case Errc::wrong_size: return "wrong size";
    case Errc::cocycle_violation: return "cocycle violation";
    case Errc::not_equivariant: return "not equivariant";
    case Errc::solve_failed: return "solve failed";
    case Errc::not_k_fixed: return "not K-fixed";
    case Errc::max_len_exceeded: return "max length exceeded";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::io_error: return "io error";
  }
  return "unknown";
}

}  // namespace psh
