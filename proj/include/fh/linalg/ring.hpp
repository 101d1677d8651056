#pragma once

#include <string>

#include <gmpxx.h>

namespace fh::linalg {

/// Coefficient ring of a linear backend: ℤ, ℚ or 𝔽_p.
struct Ring {
    enum class Kind { Z, Q, Fp };
    Kind kind = Kind::Q;
    long p = 0;

    bool is_field() const { return kind != Kind::Z; }
    friend bool operator==(const Ring&, const Ring&) = default;
};

/// "Z", "Q" or "Fp:<prime>". Throws std::invalid_argument.
Ring parse_ring(const std::string& text);
std::string to_string(const Ring& r);

/// Parses "n" or "p/q". Throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);
std::string to_string(const mpq_class& q);

/// The canonical representative of q in the ring: unchanged over ℚ,
/// required integral over ℤ, reduced into {0..p-1} over 𝔽_p. Throws
/// std::domain_error when q has no image (fraction over ℤ, p | denominator).
mpq_class normalize(const mpq_class& q, const Ring& r);

} // namespace fh::linalg
