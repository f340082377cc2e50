#include "ordloc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ordloc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);

    Rat out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        mpz_class q(std::string(den), 10);
        if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        out = Rat(mpz_class(std::string(num), 10), q);
        out.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad(text);
        if (!ip.empty() && !all_digits(ip)) bad(text);
        if (!fp.empty() && !all_digits(fp)) bad(text);
        mpz_class scaled(std::string(ip) + std::string(fp), 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        out = Rat(scaled, den);
        out.canonicalize();
    } else {
        if (!all_digits(s)) bad(text);
        out = Rat(mpz_class(std::string(s), 10));
    }
    if (negative) out = -out;
    return out;
}

std::string rat_to_string(const Rat& v) {
    return v.get_str();  // canonical "p" or "p/q"
}

std::string rat_to_decimal(const Rat& v, int digits) {
    if (digits < 0) digits = 0;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
    bool neg = v < 0;
    Rat a = rat_abs(v);
    // round(|v| * 10^digits), half away from zero
    mpz_class num = a.get_num() * pow10 * 2 + a.get_den();
    mpz_class scaled = num / (a.get_den() * 2);
    mpz_class whole = scaled / pow10, frac = scaled % pow10;
    std::string fs = frac.get_str();
    if (fs.size() < static_cast<std::size_t>(digits))
        fs.insert(fs.begin(), digits - fs.size(), '0');
    std::string out = neg && scaled != 0 ? "-" : "";
    out += whole.get_str();
    if (digits > 0) out += "." + fs;
    return out;
}

double rat_to_double(const Rat& v) { return v.get_d(); }

std::string ratio_to_string(const RatioValue& r) {
    return r.infinite ? "inf" : rat_to_string(r.value);
}

}  // namespace ordloc
