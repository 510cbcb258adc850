// Copyright 2026 The tugs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUGS_RATIONAL_HPP
#define TUGS_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace tugs {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator. Expression templates are disabled so the type
/// behaves like a plain value inside Eigen expressions and `auto`.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses an integer ("-3"), a fraction ("7/6") or a finite decimal ("0.25")
/// exactly. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Lowest-terms text: "3", "-1/4".
std::string to_string(const Rational& q);

}  // namespace tugs

#endif  // TUGS_RATIONAL_HPP
