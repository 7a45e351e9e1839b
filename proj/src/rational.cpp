#include "cacti/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cacti::geom {

Rat make_rat(long num, long den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r)
{
    return r.get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Integer floor(const Rat& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rat frac(const Rat& r)
{
    return r - Rat(floor(r));
}

double to_double(const Rat& r)
{
    return r.get_d();
}

std::string to_string(const CirclePoint& p)
{
    return to_string(p.value());
}

}  // namespace cacti::geom
