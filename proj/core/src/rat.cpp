#include "nodalsplit/rat.hpp"

#include "nodalsplit/errors.hpp"

namespace nodalsplit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kNotHomogeneous: return "NotHomogeneous";
    case ErrorCode::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::kReducibleMinimalPolynomial: return "ReducibleMinimalPolynomial";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kInhomogeneousImage: return "InhomogeneousImage";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kPointNotOnConic: return "PointNotOnConic";
    case ErrorCode::kConicNotSmooth: return "ConicNotSmooth";
    case ErrorCode::kCommonComponent: return "CommonComponent";
    case ErrorCode::kShearExhausted: return "ShearExhausted";
    case ErrorCode::kTooManyNodes: return "TooManyNodes";
    case ErrorCode::kNotTangentLine: return "NotTangentLine";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kWrongNodeCount: return "WrongNodeCount";
    case ErrorCode::kNodeDegenerate: return "NodeDegenerate";
    case ErrorCode::kLineThroughNode: return "LineThroughNode";
    case ErrorCode::kHyperplaneThroughNode: return "HyperplaneThroughNode";
    case ErrorCode::kQuadricSingularAtNode: return "QuadricSingularAtNode";
    case ErrorCode::kUnknownExample: return "UnknownExample";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class n, d(1);
  auto read = [](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part[0] == '+' ? part.substr(1) : part, 10) != 0)
      throw Error(ErrorCode::kInvalidArgument, "not a rational literal: " + part);
  };
  if (slash == std::string::npos) {
    read(s, n);
  } else {
    read(s.substr(0, slash), n);
    read(s.substr(slash + 1), d);
  }
  return Rat(n, d);
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  return Rat(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Integer lcm_of_denominators_acc(const Integer& acc, const Rat& r) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), r.value().get_den_mpz_t());
  return out;
}

}  // namespace nodalsplit
