#pragma once

/**
 * @file triple.hpp
 * @brief Primitive Pythagorean triples from odd generator pairs.
 *
 * A primitive triple (a, b, c) with odd leg a is produced by odd coprime
 * s > t >= 1 as
 *
 *     a = s*t,  b = (s^2 - t^2) / 2,  c = (s^2 + t^2) / 2.
 *
 * OrderedGenerator walks the (s, t) array in increasing c, ties broken by
 * increasing a. brute_force_ordered() is an independent oracle built on the
 * classical Euclid parametrisation instead.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "pptseq/error.hpp"

namespace pptseq {

using u64 = std::uint64_t;

struct Triple {
    u64 s = 0;
    u64 t = 0;
    u64 a = 0;  // odd leg
    u64 b = 0;  // even leg
    u64 c = 0;  // hypotenuse
    std::optional<std::size_t> index;  // position in the c-ordered stream

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Stream order: c ascending, then a ascending.
inline bool stream_less(const Triple& x, const Triple& y) {
    return x.c != y.c ? x.c < y.c : x.a < y.a;
}

constexpr u64 gcd(u64 x, u64 y) {
    while (y != 0) {
        u64 r = x % y;
        x = y;
        y = r;
    }
    return x;
}

/// Why from_st() rejected its arguments.
enum class GeneratorFault { even_input, not_descending, not_coprime, overflow };

class GeneratorError : public InvalidArgument {
public:
    GeneratorError(GeneratorFault fault, const std::string& what)
        : InvalidArgument(what), fault_(fault) {}
    GeneratorFault fault() const noexcept { return fault_; }

private:
    GeneratorFault fault_;
};

/// Builds the triple for generators (s, t). Throws GeneratorError when s or t
/// is even, s <= t, gcd(s, t) > 1, or s^2 + t^2 does not fit in 64 bits.
Triple from_st(u64 s, u64 t);

/// Checks every triple invariant; returns false on the first violation.
bool satisfies_invariants(const Triple& tr);

/// Lazy c-ordered enumerator. One min-heap cursor per active row t; row t+2
/// joins the heap once row t has emitted its first cell (s = t+2), which is
/// safe because row minima strictly increase with t.
class OrderedGenerator {
public:
    OrderedGenerator();

    /// Next triple in stream order. Throws OverflowError if the next cursor
    /// would leave the 64-bit range.
    Triple next();

    std::size_t emitted() const noexcept { return emitted_; }
    std::size_t active_rows() const noexcept { return heap_.size(); }

private:
    struct Cursor {
        u64 c;
        u64 a;
        u64 s;
        u64 t;
    };
    struct Later {
        bool operator()(const Cursor& x, const Cursor& y) const {
            return x.c != y.c ? x.c > y.c : x.a > y.a;
        }
    };

    static Cursor make_cursor(u64 s, u64 t);
    void push_row(u64 t);

    std::priority_queue<Cursor, std::vector<Cursor>, Later> heap_;
    u64 highest_row_ = 0;
    std::size_t emitted_ = 0;
};

/// First `count` triples of the stream, indices 0..count-1.
std::vector<Triple> generate_ordered(std::size_t count);

/// Every primitive triple with c <= c_max in stream order, found by scanning
/// Euclid pairs (m > n, opposite parity, coprime). Independent of
/// OrderedGenerator; used as its oracle.
std::vector<Triple> brute_force_ordered(u64 c_max);

}  // namespace pptseq
