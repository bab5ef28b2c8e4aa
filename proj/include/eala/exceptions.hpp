#pragma once

#include <stdexcept>
#include <string>

namespace eala {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

struct NonInvertible : std::runtime_error {
    explicit NonInvertible(const std::string& what) : std::runtime_error("non-invertible: " + what) {}
};

struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& what) : std::runtime_error("degree overflow: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

struct BadRootIndex : std::runtime_error {
    explicit BadRootIndex(int root)
        : std::runtime_error("bad root index " + std::to_string(root) + ", expected -2, 0 or 2") {}
};

struct NotInSl2 : std::runtime_error {
    NotInSl2() : std::runtime_error("matrix fails the sl2 trace criterion") {}
};

struct BoxExhausted : std::runtime_error {
    explicit BoxExhausted(int box)
        : std::runtime_error("no solution with support in box " + std::to_string(box)) {}
};

struct InvalidSection : std::runtime_error {
    explicit InvalidSection(const std::string& residual)
        : std::runtime_error("section residual (1+i)a - (1+j)b - 1 is nonzero: " + residual) {}
};

struct NotIdempotent : std::runtime_error {
    NotIdempotent() : std::runtime_error("projection matrix is not idempotent") {}
};

struct NotAnInvolution : std::runtime_error {
    NotAnInvolution() : std::runtime_error("matrix does not square to the identity") {}
};

struct NotAnEigenvector : std::runtime_error {
    explicit NotAnEigenvector(const std::string& what) : std::runtime_error("not an eigenvector: " + what) {}
};

struct CubicFailed : std::runtime_error {
    explicit CubicFailed(const std::string& what)
        : std::runtime_error("ad-cubic annihilation failed on " + what) {}
};

struct Y0NonZero : std::runtime_error {
    explicit Y0NonZero(const std::string& witness)
        : std::runtime_error("zero-eigenspace component of [S, d_theta] is nonzero: " + witness) {}
};

struct DPrimeBracketNonZero : std::runtime_error {
    explicit DPrimeBracketNonZero(const std::string& witness)
        : std::runtime_error("[S, d'] is nonzero: " + witness) {}
};

struct ReportWriteError : std::runtime_error {
    explicit ReportWriteError(const std::string& path)
        : std::runtime_error("cannot write report to " + path) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error("bad configuration: " + what) {}
};

struct FixtureError : std::runtime_error {
    explicit FixtureError(const std::string& what) : std::runtime_error("bad section fixture: " + what) {}
};

}  // namespace eala
