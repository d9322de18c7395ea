#include "pptseq/triple.hpp"

#include <algorithm>
#include <string>

namespace pptseq {

namespace {

__extension__ typedef unsigned __int128 u128;

bool checked_square(u64 x, u64& out) {
    return !__builtin_mul_overflow(x, x, &out);
}

}  // namespace

Triple from_st(u64 s, u64 t) {
    if (s % 2 == 0 || t % 2 == 0) {
        throw GeneratorError(GeneratorFault::even_input,
                             "generators must be odd: s=" + std::to_string(s) +
                                 " t=" + std::to_string(t));
    }
    if (s <= t) {
        throw GeneratorError(GeneratorFault::not_descending,
                             "generators must satisfy s > t: s=" + std::to_string(s) +
                                 " t=" + std::to_string(t));
    }
    if (gcd(s, t) != 1) {
        throw GeneratorError(GeneratorFault::not_coprime,
                             "generators are not coprime: s=" + std::to_string(s) +
                                 " t=" + std::to_string(t));
    }
    u64 s2 = 0, t2 = 0, sum = 0;
    if (!checked_square(s, s2) || !checked_square(t, t2) ||
        __builtin_add_overflow(s2, t2, &sum)) {
        throw GeneratorError(GeneratorFault::overflow,
                             "s^2 + t^2 overflows 64 bits: s=" + std::to_string(s));
    }
    Triple tr;
    tr.s = s;
    tr.t = t;
    tr.a = s * t;
    tr.b = (s2 - t2) / 2;
    tr.c = sum / 2;
    return tr;
}

bool satisfies_invariants(const Triple& tr) {
    const auto [s, t, a, b, c, index] = tr;
    (void)index;
    if (!(s > t && t >= 1 && s % 2 == 1 && t % 2 == 1 && gcd(s, t) == 1)) return false;
    if (a != s * t || 2 * b != s * s - t * t || 2 * c != s * s + t * t) return false;
    const u128 lhs = static_cast<u128>(a) * a + static_cast<u128>(b) * b;
    const u128 rhs = static_cast<u128>(c) * c;
    if (lhs != rhs) return false;
    if (a % 2 != 1 || b % 2 != 0 || c % 2 != 1) return false;
    if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1) return false;
    return a < c;
}

OrderedGenerator::OrderedGenerator() { push_row(1); }

OrderedGenerator::Cursor OrderedGenerator::make_cursor(u64 s, u64 t) {
    u64 s2 = 0, t2 = 0, sum = 0;
    if (!checked_square(s, s2) || !checked_square(t, t2) ||
        __builtin_add_overflow(s2, t2, &sum)) {
        throw OverflowError("ordered generation exceeded 64-bit range at s=" +
                            std::to_string(s) + " t=" + std::to_string(t));
    }
    return Cursor{sum / 2, s * t, s, t};
}

void OrderedGenerator::push_row(u64 t) {
    // gcd(t + 2, t) = gcd(2, t) = 1 for odd t, so the row head is always valid.
    heap_.push(make_cursor(t + 2, t));
    highest_row_ = t;
}

Triple OrderedGenerator::next() {
    Cursor top = heap_.top();
    heap_.pop();

    if (top.s == top.t + 2 && top.t == highest_row_) push_row(top.t + 2);

    u64 s = top.s + 2;
    while (gcd(s, top.t) != 1) s += 2;
    heap_.push(make_cursor(s, top.t));

    Triple tr;
    tr.s = top.s;
    tr.t = top.t;
    tr.a = top.a;
    tr.b = (top.s * top.s - top.t * top.t) / 2;
    tr.c = top.c;
    tr.index = emitted_++;
    return tr;
}

std::vector<Triple> generate_ordered(std::size_t count) {
    if (count == 0) throw InvalidArgument("generate_ordered: count must be >= 1");
    std::vector<Triple> out;
    out.reserve(count);
    OrderedGenerator gen;
    while (out.size() < count) out.push_back(gen.next());
    return out;
}

std::vector<Triple> brute_force_ordered(u64 c_max) {
    std::vector<Triple> out;
    // c = m^2 + n^2 with m > n >= 1, so m^2 < c_max.
    for (u64 m = 2; m * m < c_max; ++m) {
        for (u64 n = (m % 2 == 0) ? 1 : 2; n < m; n += 2) {
            if (gcd(m, n) != 1) continue;
            const u64 c = m * m + n * n;
            if (c > c_max) break;
            Triple tr;
            tr.a = m * m - n * n;
            tr.b = 2 * m * n;
            tr.c = c;
            tr.s = m + n;
            tr.t = m - n;
            out.push_back(tr);
        }
    }
    std::sort(out.begin(), out.end(), stream_less);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
    return out;
}

}  // namespace pptseq
