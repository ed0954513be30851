#ifndef CSPD_TYPES_HPP
#define CSPD_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace cspd {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

class InvalidDimension : public Error {
public:
    explicit InvalidDimension(const std::string& msg) : Error(msg) {}
};

class DegenerateState : public Error {
public:
    explicit DegenerateState(const std::string& msg) : Error(msg) {}
};

class SolverFailure : public Error {
public:
    explicit SolverFailure(const std::string& msg) : Error(msg) {}
};

class BracketFailure : public Error {
public:
    explicit BracketFailure(const std::string& msg) : Error(msg) {}
};

class UndefinedMetric : public Error {
public:
    explicit UndefinedMetric(const std::string& msg) : Error(msg) {}
};

} // namespace cspd

#endif
