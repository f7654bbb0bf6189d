#include "diaconf/poly.hpp"

#include <cctype>
#include <sstream>

namespace diaconf {

namespace {
constexpr const char* kSymNames[kNumSyms] = {"T", "L", "M", "x", "t"};
const ExpVec kZeroExp{};
}  // namespace

const char* sym_name(Sym s) { return kSymNames[static_cast<int>(s)]; }

std::optional<Sym> sym_from_name(const std::string& name) {
    for (int i = 0; i < kNumSyms; ++i)
        if (name == kSymNames[i]) return static_cast<Sym>(i);
    return std::nullopt;
}

Poly::Poly(const Rat& c) {
    if (c != 0) terms_[kZeroExp] = c;
}

Poly Poly::var(Sym s, int exp) {
    Poly p;
    if (exp == 0) return Poly(1);
    ExpVec e{};
    e[static_cast<int>(s)] = exp;
    p.terms_[e] = Rat(1);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
}

Rat Poly::constant_term() const {
    auto it = terms_.find(kZeroExp);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Poly::degree(Sym s) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(s)]);
    return d;
}

Poly Poly::coeff_of(Sym s, int k) const {
    Poly out;
    const int si = static_cast<int>(s);
    for (const auto& [e, c] : terms_) {
        if (e[si] != k) continue;
        ExpVec r = e;
        r[si] = 0;
        out.add_term(r, c);
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e;
            for (int i = 0; i < kNumSyms; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(int e) const {
    Poly out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

Poly Poly::substitute(const std::map<Sym, Poly>& bindings) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        Poly term(c);
        for (int i = 0; i < kNumSyms; ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(static_cast<Sym>(i));
            if (it == bindings.end())
                term *= Poly::var(static_cast<Sym>(i), e[i]);
            else
                term *= it->second.pow(e[i]);
        }
        out += term;
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponent order gives "T^2 + 2*T*L + L^2"
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = e != kZeroExp;
        bool printed = false;
        if (a != 1 || !has_vars) {
            os << rat_str(a);
            printed = true;
        }
        for (int i = 0; i < kNumSyms; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << kSymNames[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw input_error("polynomial parse error at position " + std::to_string(i) + " in \"" + s + "\": " + what);
    }

    int parse_int() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected integer");
        return std::stoi(s.substr(start, i - start));
    }

    Poly parse_factor() {
        skip_ws();
        if (i >= s.size()) fail("expected factor");
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
            return Poly(parse_rat(s.substr(start, i - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            std::string name = s.substr(start, i - start);
            auto sym = sym_from_name(name);
            if (!sym) fail("unknown indeterminate \"" + name + "\" (expected one of T, L, M, x, t)");
            int exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                exp = parse_int();
            }
            return Poly::var(*sym, exp);
        }
        fail("unexpected character");
    }

    Poly parse_term() {
        Poly p = parse_factor();
        skip_ws();
        while (i < s.size() && s[i] == '*') {
            ++i;
            p *= parse_factor();
            skip_ws();
        }
        return p;
    }

    Poly parse() {
        Poly out;
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        while (true) {
            Poly t = parse_term();
            out += neg ? -t : t;
            skip_ws();
            if (i >= s.size()) break;
            if (s[i] == '+')
                neg = false;
            else if (s[i] == '-')
                neg = true;
            else
                fail("expected '+' or '-'");
            ++i;
        }
        return out;
    }
};

}  // namespace

Poly parse_poly(const std::string& s) {
    PolyParser p(s);
    return p.parse();
}

}  // namespace diaconf
