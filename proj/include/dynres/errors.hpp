#ifndef DYNRES_ERRORS_HPP
#define DYNRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynres {

// Mathematical rejections (bad input, wrong type, ...). CLI exit code 2.
struct math_error : std::runtime_error {
  explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Resource budget exhaustion. Never a wrong answer; CLI exit code 3.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct non_finite_type : math_error {
  explicit non_finite_type(const std::string& msg = "diagram is not of finite type") : math_error(msg) {}
};
struct singular_cartan : math_error {
  explicit singular_cartan(const std::string& msg = "Cartan matrix is singular (affine type)") : math_error(msg) {}
};
struct malformed_format : math_error {
  explicit malformed_format(const std::string& msg) : math_error(msg) {}
};
struct non_dynkin_format : math_error {
  explicit non_dynkin_format(const std::string& msg = "format is not Dynkin") : math_error(msg) {}
};
struct non_dominant_weight : math_error {
  explicit non_dominant_weight(const std::string& msg = "weight is not dominant integral") : math_error(msg) {}
};
struct unsupported_f0 : math_error {
  explicit unsupported_f0(const std::string& msg = "operation requires f0 = 1") : math_error(msg) {}
};
struct too_many_rows : math_error {
  explicit too_many_rows(const std::string& msg = "partition has more rows than available letters") : math_error(msg) {}
};
struct variable_mismatch : math_error {
  explicit variable_mismatch(const std::string& msg = "incompatible variable counts") : math_error(msg) {}
};
struct not_minuscule : math_error {
  explicit not_minuscule(const std::string& msg = "node is not minuscule for this diagram") : math_error(msg) {}
};
struct unsupported_shape : math_error {
  explicit unsupported_shape(const std::string& msg) : math_error(msg) {}
};
struct unsupported_format : math_error {
  explicit unsupported_format(const std::string& msg) : math_error(msg) {}
};
struct non_minimal_complex : math_error {
  explicit non_minimal_complex(const std::string& msg = "complex is not minimal") : math_error(msg) {}
};
struct not_perfect : math_error {
  explicit not_perfect(const std::string& msg = "quotient is not perfect of grade 3") : math_error(msg) {}
};

}  // namespace dynres

#endif
