#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tubex {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// error taxonomy shared across modules; the CLI maps these to exit codes
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct file_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string rat_str(const Rat& q) {
    return q.str();
}

// 3^e for possibly negative e (appendix offset function needs 3^{-1})
inline Rat pow3(long e) {
    Rat r = 1;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= 3;
    return e >= 0 ? r : Rat(1) / r;
}

}  // namespace tubex
