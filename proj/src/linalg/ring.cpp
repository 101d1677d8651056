#include "fh/linalg/ring.hpp"

#include <stdexcept>

namespace fh::linalg {

namespace {

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0)
            return false;
    }
    return true;
}

} // namespace

Ring parse_ring(const std::string& text)
{
    if (text == "Z")
        return {Ring::Kind::Z, 0};
    if (text == "Q")
        return {Ring::Kind::Q, 0};
    if (text.rfind("Fp:", 0) == 0) {
        long p = 0;
        try {
            std::size_t used = 0;
            p = std::stol(text.substr(3), &used);
            if (used != text.size() - 3)
                p = 0;
        } catch (const std::exception&) {
            p = 0;
        }
        if (!is_prime(p) || p > 3037000493L)
            throw std::invalid_argument("Fp needs a prime below 2^31.5, got '" + text + "'");
        return {Ring::Kind::Fp, p};
    }
    throw std::invalid_argument("unknown ring '" + text + "'");
}

std::string to_string(const Ring& r)
{
    switch (r.kind) {
    case Ring::Kind::Z:
        return "Z";
    case Ring::Kind::Q:
        return "Q";
    case Ring::Kind::Fp:
        return "Fp:" + std::to_string(r.p);
    }
    return "Q";
}

mpq_class parse_rational(const std::string& text)
{
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

mpq_class normalize(const mpq_class& q, const Ring& r)
{
    switch (r.kind) {
    case Ring::Kind::Q:
        return q;
    case Ring::Kind::Z:
        if (q.get_den() != 1)
            throw std::domain_error("non-integral coefficient " + q.get_str() + " over Z");
        return q;
    case Ring::Kind::Fp: {
        mpz_class p = r.p;
        mpz_class den = q.get_den();
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("denominator of " + q.get_str() + " vanishes mod " + std::to_string(r.p));
        mpz_class v = q.get_num() * inv;
        mpz_class m;
        mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return mpq_class(m);
    }
    }
    return q;
}

} // namespace fh::linalg
