#include "llab/rat.hpp"

#include <cctype>

namespace llab {

std::string Rat::to_string() const {
    std::string s = num().str();
    if (!is_integer()) {
        s += "/";
        s += den().str();
    }
    return s;
}

Rat Rat::parse(const std::string& text) {
    const auto bad = [&] { return input_error("malformed rational \"" + text + "\""); };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw bad();
    Int num(text.substr(0, i));
    if (i == text.size()) return Rat(num);
    if (text[i] != '/') throw bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw bad();
    Int den(text.substr(den_begin));
    if (den == 0) throw bad();
    return Rat(num, den);
}

Rat Rat::pow(const Rat& base, unsigned long exp) {
    Rat result(1);
    Rat b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

Int binom_int(const Int& n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && n < k) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

Int count_monomials(long deg, long nvars) {
    if (deg < 0) return 0;
    if (nvars == 0) return deg == 0 ? 1 : 0;
    return binom_int(Int(deg + nvars - 1), nvars - 1);
}

} // namespace llab
