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

#ifndef HRT_PRIME_FIELD_HPP
#define HRT_PRIME_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hrt
{

bool is_prime(std::uint64_t p);

/// Dense matrix over Z/pZ, p a prime below 2^32 so products fit in 64 bits.
class PrimeFieldMatrix
{
public:
    /// Throws std::invalid_argument when p is not a prime below 2^32.
    PrimeFieldMatrix(std::uint64_t p, std::size_t rows, std::size_t cols);

    std::uint64_t modulus() const noexcept
    {
        return m_p;
    }
    std::size_t rows() const noexcept
    {
        return m_rows;
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }

    std::uint64_t at(std::size_t r, std::size_t c) const
    {
        return m_data[r * m_cols + c];
    }
    void set(std::size_t r, std::size_t c, std::uint64_t v)
    {
        m_data[r * m_cols + c] = v % m_p;
    }
    void add(std::size_t r, std::size_t c, std::uint64_t v)
    {
        auto &x = m_data[r * m_cols + c];
        x = (x + v % m_p) % m_p;
    }

    /// Rank by Gaussian elimination on a copy.
    std::size_t rank() const;

private:
    std::uint64_t m_p;
    std::size_t m_rows;
    std::size_t m_cols;
    std::vector<std::uint64_t> m_data;
};

} // namespace hrt

#endif
