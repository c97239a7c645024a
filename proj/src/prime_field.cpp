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

#include <hrt/prime_field.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace hrt
{

namespace
{

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::uint64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
    : m_p(p), m_rows(rows), m_cols(cols), m_data(rows * cols, 0)
{
    if (p >= (std::uint64_t(1) << 32) || !is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^32");
    }
}

std::size_t PrimeFieldMatrix::rank() const
{
    auto a = m_data;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m_cols && rank < m_rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < m_rows && a[pivot * m_cols + c] == 0) {
            ++pivot;
        }
        if (pivot == m_rows) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t k = c; k < m_cols; ++k) {
                std::swap(a[pivot * m_cols + k], a[rank * m_cols + k]);
            }
        }
        const std::uint64_t inv = pow_mod(a[rank * m_cols + c], m_p - 2, m_p);
        for (std::size_t r = rank + 1; r < m_rows; ++r) {
            const std::uint64_t x = a[r * m_cols + c];
            if (x == 0) {
                continue;
            }
            const std::uint64_t factor = x * inv % m_p;
            for (std::size_t k = c; k < m_cols; ++k) {
                const std::uint64_t sub = factor * a[rank * m_cols + k] % m_p;
                auto &y = a[r * m_cols + k];
                y = (y + m_p - sub) % m_p;
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace hrt
