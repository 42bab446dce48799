#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace treespec {

// Expression templates are off so the types behave as plain scalars inside
// Eigen matrices and std algorithms.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline int sign(const BigInt& v) { return v.sign(); }
inline int sign(const BigRational& v) { return v.sign(); }

}  // namespace treespec
