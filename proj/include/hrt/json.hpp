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

#ifndef HRT_JSON_HPP
#define HRT_JSON_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include <hrt/integer.hpp>

namespace hrt
{

/// Insertion-ordered JSON so that emitted documents have a fixed key order.
using Json = nlohmann::ordered_json;

/// Malformed external input; `field()` is a path such as
/// "components[1][0][2]".
class input_error : public std::runtime_error
{
public:
    input_error(std::string field, const std::string &what)
        : std::runtime_error(field + ": " + what), m_field(std::move(field))
    {
    }

    const std::string &field() const noexcept
    {
        return m_field;
    }

private:
    std::string m_field;
};

/// Number when the value fits in int64, decimal string otherwise.
inline Json integer_json(const Integer &x)
{
    if (auto v = to_int64(x)) {
        return *v;
    }
    return x.str();
}

inline Json rational_json(const Rational &x)
{
    if (boost::multiprecision::denominator(x) == 1) {
        return integer_json(boost::multiprecision::numerator(x));
    }
    return to_string(x);
}

} // namespace hrt

#endif
