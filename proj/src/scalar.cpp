#include "jcone/scalar.hpp"

#include <ostream>
#include <string>

#include "jcone/error.hpp"

namespace jcone {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSingular: return "Singular";
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotPositive: return "NotPositive";
    case ErrorKind::kNotInImage: return "NotInImage";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNotJHermitian: return "NotJHermitian";
    case ErrorKind::kNotJPositive: return "NotJPositive";
    case ErrorKind::kSignatureMismatch: return "SignatureMismatch";
    case ErrorKind::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::kNotBulletCommuting: return "NotBulletCommuting";
    case ErrorKind::kStepTooSmall: return "StepTooSmall";
    case ErrorKind::kPremiseViolated: return "PremiseViolated";
    case ErrorKind::kUnknownSuite: return "UnknownSuite";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

QuaternionPolar polar(const Quaternion& q) {
  QuaternionPolar r;
  r.a = q.a;
  r.b = std::sqrt(q.b * q.b + q.c * q.c + q.d * q.d);
  if (r.b > 0.0) r.axis = q.imag() / r.b;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << q.a << (q.b < 0 ? "-" : "+") << std::abs(q.b) << "i"
            << (q.c < 0 ? "-" : "+") << std::abs(q.c) << "j"
            << (q.d < 0 ? "-" : "+") << std::abs(q.d) << "k";
}

std::string_view field_name(Field f) {
  switch (f) {
    case Field::kReal: return "R";
    case Field::kComplex: return "C";
    case Field::kQuaternion: return "H";
  }
  return "?";
}

Field parse_field(std::string_view s) {
  if (s == "R") return Field::kReal;
  if (s == "C") return Field::kComplex;
  if (s == "H") return Field::kQuaternion;
  throw Error(ErrorKind::kParse, "unknown field '" + std::string(s) + "'");
}

}  // namespace jcone
