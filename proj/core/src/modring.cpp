#include "cpm/modring.hpp"

#include <numeric>
#include <stdexcept>

namespace cpm {

i64 mod_reduce(i64 a, i64 n) {
    if (n < 1) throw std::invalid_argument("mod_reduce: modulus must be positive");
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

i64 mod_add(i64 a, i64 b, i64 n) { return mod_reduce(mod_reduce(a, n) + mod_reduce(b, n), n); }

i64 mod_sub(i64 a, i64 b, i64 n) { return mod_reduce(mod_reduce(a, n) - mod_reduce(b, n), n); }

i64 mod_mul(i64 a, i64 b, i64 n) {
    using i128 = __int128;
    i128 p = static_cast<i128>(mod_reduce(a, n)) * static_cast<i128>(mod_reduce(b, n));
    return static_cast<i64>(p % n);
}

i64 mod_pow(i64 a, i64 e, i64 n) {
    if (e < 0) throw std::invalid_argument("mod_pow: negative exponent");
    i64 base = mod_reduce(a, n);
    i64 acc = mod_reduce(1, n);
    while (e > 0) {
        if (e & 1) acc = mod_mul(acc, base, n);
        base = mod_mul(base, base, n);
        e >>= 1;
    }
    return acc;
}

bool is_unit(i64 a, i64 n) { return std::gcd(mod_reduce(a, n), n) == 1; }

i64 mod_inverse(i64 a, i64 n) {
    // extended gcd
    i64 r0 = n, r1 = mod_reduce(a, n);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: not a unit");
    return mod_reduce(t0, n);
}

Residue::Residue(i64 v, i64 n) : value(mod_reduce(v, n)), modulus(n) {
    if (n < 2) throw std::invalid_argument("Residue: modulus must be at least 2");
}

Residue Residue::operator+(const Residue& o) const {
    if (modulus != o.modulus) throw std::invalid_argument("Residue: modulus mismatch");
    return Residue(mod_add(value, o.value, modulus), modulus);
}

Residue Residue::operator-(const Residue& o) const {
    if (modulus != o.modulus) throw std::invalid_argument("Residue: modulus mismatch");
    return Residue(mod_sub(value, o.value, modulus), modulus);
}

Residue Residue::operator*(const Residue& o) const {
    if (modulus != o.modulus) throw std::invalid_argument("Residue: modulus mismatch");
    return Residue(mod_mul(value, o.value, modulus), modulus);
}

Residue Residue::operator-() const { return Residue(mod_sub(0, value, modulus), modulus); }

Residue Residue::pow(i64 e) const { return Residue(mod_pow(value, e, modulus), modulus); }

Residue Residue::inverse() const { return Residue(mod_inverse(value, modulus), modulus); }

bool Residue::is_unit() const { return cpm::is_unit(value, modulus); }

bool is_plus_minus_one(i64 x, i64 n) {
    i64 v = mod_reduce(x, n);
    return v == mod_reduce(1, n) || v == mod_reduce(-1, n);
}

bool is_valid_r(i64 m, i64 s, i64 n, i64 r) {
    if (m < 1 || s < 1 || n < 3) return false;
    if (!is_unit(r, n)) return false;
    return is_plus_minus_one(mod_pow(r, m * s, n), n);
}

bool cond_arc_transitive(i64 s, i64 n, i64 r) {
    if (!is_unit(r, n)) throw std::invalid_argument("cond_arc_transitive: r must be a unit");
    i64 t = mod_pow(r, 2 * s, n);
    return mod_mul(2, mod_add(t, 1, n), n) == 0 || mod_mul(2, mod_sub(t, 1, n), n) == 0;
}

bool cond_two_arc_transitive(i64 m, i64 s, i64 n, i64 r) {
    if (s != 2) return false;
    if (n == 4 && m == 1) return true;
    i64 r2 = mod_pow(r, 2, n);
    if (n == m && n % 2 == 1 && is_plus_minus_one(r2, n)) return true;
    if (n == 2 * m && m % 4 == 2 && mod_add(1, r2, n) == mod_reduce(m, n)) return true;
    return false;
}

}  // namespace cpm
