#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "pptseq/triple.hpp"

/// Published reference values: the prefix-divisibility table for primes 3..29
/// and the printed class strings for moduli 3, 5 and 7.
namespace pptseq::published {

inline constexpr std::array<std::size_t, 17> kTableLengths = {1000, 2000, 3000, 4000, 5000, 10000, 15000, 20000, 25000, 30000, 40000, 50000, 60000, 70000, 80000, 90000, 100000};
inline constexpr std::array<u64, 9> kTablePrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29};

/// Published count for (length, prime), or 0 when the cell is not in the table.
std::size_t table_count(std::size_t length, u64 prime);

/// The duplicated 17/19 columns in rows 1000 and 2000 look like copy errors.
bool is_suspect_cell(std::size_t length, u64 prime);

/// Printed class-letter string for modulus 3, 5 or 7; empty otherwise.
std::string_view class_string(u64 modulus);

}  // namespace pptseq::published
