#pragma once

#include <stdexcept>
#include <string>

namespace ptmom {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A matrix failed the Hermiticity check. Carries max |A(i,j) - conj(A(j,i))|.
class not_hermitian : public error {
public:
    explicit not_hermitian(double magnitude)
        : error("matrix is not Hermitian, max asymmetry " + std::to_string(magnitude)),
          magnitude_(magnitude) {}
    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

/// A density matrix does not have unit trace. Carries |tr - 1|.
class trace_not_one : public error {
public:
    explicit trace_not_one(double magnitude)
        : error("matrix trace differs from 1 by " + std::to_string(magnitude)),
          magnitude_(magnitude) {}
    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

/// A matrix (or parameter set) is not positive semidefinite.
/// Carries the most negative eigenvalue or the violated slack.
class not_positive_semidefinite : public error {
public:
    explicit not_positive_semidefinite(double magnitude)
        : error("matrix is not positive semidefinite, min eigenvalue " +
                std::to_string(magnitude)),
          magnitude_(magnitude) {}
    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

/// A scalar argument lies outside its documented domain.
class out_of_range : public error {
public:
    out_of_range(const std::string& what_arg, double value)
        : error(what_arg + " (got " + std::to_string(value) + ")"), value_(value) {}
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// X-state family parameters violate the validity range of the requested case.
class out_of_validity_range : public error {
public:
    explicit out_of_validity_range(const std::string& violated)
        : error("parameters outside case validity range: " + violated) {}
};

/// X-state parameters do not satisfy the constraint pattern of the case id.
class case_mismatch : public error {
public:
    explicit case_mismatch(const std::string& detail)
        : error("parameters do not match case constraints: " + detail) {}
};

/// The moment quartic has no root close enough to the real axis; the moments
/// are inconsistent with any two-qubit state.
class no_real_root : public error {
public:
    no_real_root() : error("negativity quartic has no real root") {}
};

/// Malformed input file or stream.
class input_error : public error {
public:
    explicit input_error(const std::string& detail) : error("bad input: " + detail) {}
};

} // namespace ptmom
