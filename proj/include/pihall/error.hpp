#ifndef PIHALL_ERROR_HPP_
#define PIHALL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pihall {

enum class Errc {
  invalid_argument,
  degree_mismatch,
  not_a_permutation,
  not_a_subgroup,
  not_normal,
  not_minimal_normal,
  not_subnormal,
  bound_exceeded,
  not_e_pi,
  not_c_pi,
  invalid_automorphism,
  unsupported_atom,
  parse_error,
  io_error,
  // A theorem-guaranteed search came up empty: implementation bug, not user error.
  hard_failure,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::not_a_permutation: return "not_a_permutation";
    case Errc::not_a_subgroup: return "not_a_subgroup";
    case Errc::not_normal: return "not_normal";
    case Errc::not_minimal_normal: return "not_minimal_normal";
    case Errc::not_subnormal: return "not_subnormal";
    case Errc::bound_exceeded: return "bound_exceeded";
    case Errc::not_e_pi: return "not_e_pi";
    case Errc::not_c_pi: return "not_c_pi";
    case Errc::invalid_automorphism: return "invalid_automorphism";
    case Errc::unsupported_atom: return "unsupported_atom";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
    case Errc::hard_failure: return "hard_failure";
  }
  return "unknown";
}

}  // namespace pihall

#endif  // PIHALL_ERROR_HPP_
