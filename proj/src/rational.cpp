#include "stabdec/rational.hpp"

namespace stabdec {

std::optional<Rat> parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) return std::nullopt;

    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (!ip.empty() && ip[0] == '+') ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        for (char c : ip + fp)
            if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        mpz_class num(ip + fp);
        mpz_class den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rat q(num, den);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    }
    try {
        Rat q(t);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

mpz_class denominator_lcm(const std::vector<Rat>& vals) {
    mpz_class l = 1;
    for (const auto& v : vals) {
        mpz_class d = v.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

}  // namespace stabdec
