// Copyright 2026 The hrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HRT_INTEGER_HPP
#define HRT_INTEGER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hrt
{

/// Arbitrary-precision signed integer used for every count and binomial.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a count exceeds the dimension of the space it lives in
/// (segment longer than S_d, Hilbert value above dim F_m, ...).
/// `field()` names the offending argument.
class capacity_error : public std::out_of_range
{
public:
    capacity_error(std::string field, const std::string &what)
        : std::out_of_range(what), m_field(std::move(field))
    {
    }

    const std::string &field() const noexcept
    {
        return m_field;
    }

private:
    std::string m_field;
};

inline std::string to_string(const Integer &x)
{
    return x.str();
}

inline std::string to_string(const Rational &x)
{
    auto num = boost::multiprecision::numerator(x);
    auto den = boost::multiprecision::denominator(x);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

/// Value as int64 when it fits.
inline std::optional<std::int64_t> to_int64(const Integer &x)
{
    if (x > (std::numeric_limits<std::int64_t>::max)() || x < (std::numeric_limits<std::int64_t>::min)()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(x);
}

} // namespace hrt

#endif
