#pragma once

#include <cstdint>

namespace cpm {

using i64 = std::int64_t;

// Arithmetic in Z_n, fully reduced representatives in [0, n).
i64 mod_reduce(i64 a, i64 n);
i64 mod_add(i64 a, i64 b, i64 n);
i64 mod_sub(i64 a, i64 b, i64 n);
i64 mod_mul(i64 a, i64 b, i64 n);
i64 mod_pow(i64 a, i64 e, i64 n);

bool is_unit(i64 a, i64 n);
// Multiplicative inverse in Z_n; throws std::domain_error("not a unit") otherwise.
i64 mod_inverse(i64 a, i64 n);

// An element of Z_n. Arithmetic keeps the value reduced.
struct Residue {
    i64 value;
    i64 modulus;

    Residue(i64 v, i64 n);

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;
    Residue pow(i64 e) const;
    Residue inverse() const;
    bool is_unit() const;
    bool operator==(const Residue& o) const { return value == o.value && modulus == o.modulus; }
};

// "x = +-1 in Z_n" in the sense used throughout: at least one of x-1, x+1 is 0.
bool is_plus_minus_one(i64 x, i64 n);

// r is admissible for the tuple (m, s, n): a unit with r^(ms) = +-1.
bool is_valid_r(i64 m, i64 s, i64 n, i64 r);

// 2(r^(2s) + 1) = 0 or 2(r^(2s) - 1) = 0 in Z_n: exactly when the graph
// CPM(m,s,n;r) with s >= 2 is arc-transitive.
bool cond_arc_transitive(i64 s, i64 n, i64 r);

// The three 2-arc-transitive families: s = 2 and either (n,m) = (4,1),
// or n = m odd with r^2 = +-1, or n = 2m, m = 2 (mod 4), 1 + r^2 = m.
bool cond_two_arc_transitive(i64 m, i64 s, i64 n, i64 r);

}  // namespace cpm
