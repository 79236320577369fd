#include "tlab/scalar.hpp"

#include <cctype>
#include <ostream>

#include "tlab/error.hpp"

namespace tlab {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::BadOrder: return "BAD_ORDER";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::NotStrict2: return "NOT_STRICT2";
    case ErrorCode::TangentPair: return "TANGENT_PAIR";
    case ErrorCode::PreViolated: return "PRE_VIOLATED";
    case ErrorCode::ProjParallel: return "PROJ_PARALLEL";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::GenFailed: return "GEN_FAILED";
    case ErrorCode::NoSections: return "NO_SECTIONS";
    case ErrorCode::NotPairwise: return "NOT_PAIRWISE";
    case ErrorCode::NotGood: return "NOT_GOOD";
    case ErrorCode::UnknownSuite: return "UNKNOWN_SUITE";
    case ErrorCode::VerifyFailed: return "VERIFY_FAILED";
  }
  return "UNKNOWN";
}

void Scalar::set_ll(long long n) {
  if (n >= 0) {
    v_ = mpq_class(mpz_class(static_cast<unsigned long>(n)));
  } else {
    // avoid overflow on LLONG_MIN
    mpz_class m(static_cast<unsigned long>(-(n + 1)));
    m += 1;
    v_ = mpq_class(-m);
  }
}

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator");
  Scalar n(num), d(den);
  v_ = n.v_ / d.v_;
  v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::BadInput, "division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::from_string(const std::string& s) {
  // validate shape before handing to GMP: [-]digits[/[-]digits]
  auto bad = [&]() -> Error {
    return Error(ErrorCode::BadInput, "malformed rational '" + s + "'");
  };
  if (s.empty()) throw bad();
  size_t i = 0;
  auto scan_int = [&]() {
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i > start;
  };
  if (!scan_int()) throw bad();
  if (i < s.size()) {
    if (s[i] != '/') throw bad();
    ++i;
    if (!scan_int() || i != s.size()) throw bad();
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw bad();
  if (v.get_den() == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + s + "'");
  v.canonicalize();
  return Scalar(v);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tlab
