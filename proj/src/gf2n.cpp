#include "bfa/gf2n.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "bfa/boolfunc.hpp"
#include "bfa/vbf.hpp"

namespace bfa {

namespace {

constexpr int kMaxDegree = 16;

// Conway polynomials C_{2,n} for n = 1..16: the lexicographically least
// primitive polynomial of each degree compatible with all proper subfields.
constexpr uint32_t kConway[17] = {
    0,       0x3,    0x7,    0xb,    0x13,   0x25,   0x5b,    0x83,
    0x11d,   0x211,  0x46f,  0x805,  0x10eb, 0x201b, 0x40a9,  0x8035,
    0x1002d,
};

uint32_t clmul_reduce(uint32_t a, uint32_t b, uint32_t modulus, int n) {
    uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> n & 1) a ^= modulus;
    }
    return r;
}

// remainder of polynomial division over F_2
uint32_t poly_mod(uint32_t a, uint32_t f) {
    const int df = int(std::bit_width(f)) - 1;
    while (a && int(std::bit_width(a)) - 1 >= df)
        a ^= f << (int(std::bit_width(a)) - 1 - df);
    return a;
}

std::string poly_to_binary(uint32_t p) {
    std::string s = "0b";
    for (int i = std::bit_width(p) - 1; i >= 0; --i) s += char('0' + (p >> i & 1));
    return s;
}

// exhaustive factor search; returns a proper divisor or 0
uint32_t find_factor(uint32_t modulus, int n) {
    for (int d = 1; d <= n / 2; ++d)
        for (uint32_t q = uint32_t(1) << d; q < uint32_t(2) << d; ++q)
            if (poly_mod(modulus, q) == 0) return q;
    return 0;
}

}  // namespace

// --- FieldSpec -------------------------------------------------------------

FieldSpec FieldSpec::with_modulus(int n, uint32_t modulus) {
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("FieldSpec: extension degree must be in [1, 16]");
    if (int(std::bit_width(modulus)) - 1 != n)
        throw std::invalid_argument("FieldSpec: modulus must have degree exactly n");
    if (uint32_t q = find_factor(modulus, n))
        throw std::invalid_argument("FieldSpec: modulus is reducible, divisible by " +
                                    poly_to_binary(q));

    // least primitive element; z (= 2) is primitive for all the Conway moduli
    FieldSpec spec(n, modulus, 0, 0);
    uint32_t generator = 0;
    for (uint32_t cand = 2; cand < spec.size(); ++cand)
        if (spec.order(cand) == spec.size() - 1) {
            generator = cand;
            break;
        }
    if (generator == 0 && n == 1) generator = 1;  // GF(2): the unit group is trivial
    spec.generator_ = generator;

    // Tr(z^i) for the basis powers; trace of a general element is then a parity
    uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
        uint32_t p = spec.pow(2, i);
        uint32_t acc = p;
        for (int j = 1; j < n; ++j) {
            p = spec.mul(p, p);
            acc ^= p;
        }
        if (acc > 1) throw std::logic_error("FieldSpec: trace left the prime field");
        mask |= acc << i;
    }
    spec.trace_mask_ = mask;
    return spec;
}

FieldSpec FieldSpec::conway(int n) {
    return with_modulus(n, conway_modulus(n));
}

uint32_t FieldSpec::conway_modulus(int n) {
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("conway_modulus: degree must be in [1, 16]");
    return kConway[n];
}

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
    return clmul_reduce(a, b, modulus_, n_);
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= size() - 1;
    uint32_t r = 1;
    uint32_t base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int FieldSpec::trace(uint32_t a) const {
    return std::popcount(a & trace_mask_) & 1;
}

uint32_t FieldSpec::order(uint32_t a) const {
    if (a == 0) throw std::domain_error("order: zero has no multiplicative order");
    uint32_t b = a;
    uint32_t k = 1;
    while (b != 1) {
        b = mul(b, a);
        ++k;
    }
    return k;
}

std::string FieldSpec::to_string() const {
    return "n=" + std::to_string(n_) + ",mod=" + poly_to_binary(modulus_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(uint8_t(c))) s += c;

    int n = -1;
    std::optional<uint32_t> modulus;
    bool conway_requested = false;
    size_t pos = 0;
    while (pos < s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        const std::string_view part = std::string_view(s).substr(pos, comma - pos);
        const size_t eq = part.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected key=value", pos);
        const std::string_view key = part.substr(0, eq);
        const std::string_view val = part.substr(eq + 1);
        if (key == "n") {
            n = 0;
            for (char c : val) {
                if (!std::isdigit(uint8_t(c)))
                    throw ParseError("invalid degree", pos + eq + 1);
                n = n * 10 + (c - '0');
            }
        } else if (key == "mod") {
            if (val == "conway") {
                conway_requested = true;
            } else if (val.substr(0, 2) == "0b") {
                uint32_t m = 0;
                for (char c : val.substr(2)) {
                    if (c != '0' && c != '1')
                        throw ParseError("invalid binary modulus", pos + eq + 1);
                    m = m << 1 | uint32_t(c - '0');
                }
                modulus = m;
            } else {
                throw ParseError("modulus must be 'conway' or a 0b literal", pos + eq + 1);
            }
        } else {
            throw ParseError("unknown key in field spec", pos);
        }
        pos = comma + 1;
    }
    if (n < 0) throw ParseError("field spec needs n=<degree>", 0);
    if (conway_requested || !modulus) return conway(n);
    return with_modulus(n, *modulus);
}

// --- FieldElement -----------------------------------------------------------

FieldElement::FieldElement(const FieldSpec& field, uint32_t bits)
    : field_(field), bits_(bits) {
    if (bits >= field.size())
        throw std::invalid_argument("FieldElement: value must be below 2^n");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw std::domain_error("FieldElement: mixed-field addition");
    return FieldElement(field_, bits_ ^ o.bits_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw std::domain_error("FieldElement: mixed-field multiplication");
    return FieldElement(field_, field_.mul(bits_, o.bits_));
}

FieldElement FieldElement::pow(uint64_t e) const {
    return FieldElement(field_, field_.pow(bits_, e));
}

// --- gcd facts ---------------------------------------------------------------

GcdPow2 gcd_pow2(int n, int k) {
    if (n < 1 || k < 1)
        throw std::domain_error("gcd_pow2: n and k must be positive");
    GcdPow2 g;
    g.m = std::gcd(uint64_t(n), uint64_t(k));
    g.s = std::gcd(uint64_t(n), uint64_t(2) * k);
    g.e = (uint64_t(n) / g.m) % 2 == 1 ? 1 : (uint64_t(1) << g.m) + 1;
    return g;
}

// --- univariate polynomials -----------------------------------------------------

UnivariatePoly::UnivariatePoly(const FieldSpec& field, std::vector<PolyTerm> terms)
    : field_(field) {
    std::sort(terms.begin(), terms.end(),
              [](const PolyTerm& a, const PolyTerm& b) { return a.exponent < b.exponent; });
    for (const PolyTerm& t : terms) {
        if (t.coeff >= field.size())
            throw std::invalid_argument("UnivariatePoly: coefficient outside the field");
        if (t.exponent > field.size() - 1)
            throw std::invalid_argument("UnivariatePoly: exponent out of range [0, 2^n-1]");
        if (!terms_.empty() && terms_.back().exponent == t.exponent)
            terms_.back().coeff ^= t.coeff;  // field addition
        else
            terms_.push_back(t);
    }
    std::erase_if(terms_, [](const PolyTerm& t) { return t.coeff == 0; });
}

int UnivariatePoly::algebraic_degree() const {
    int d = 0;
    for (const PolyTerm& t : terms_) d = std::max(d, std::popcount(t.exponent));
    return d;
}

uint32_t UnivariatePoly::evaluate(uint32_t x) const {
    uint32_t acc = 0;
    for (const PolyTerm& t : terms_)
        acc ^= field_.mul(t.coeff, field_.pow(x, t.exponent));
    return acc;
}

std::string UnivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const PolyTerm& t : terms_) {
        if (!out.empty()) out += " + ";
        std::string coeff;
        if (t.coeff != 1) {
            // small fields: find the z-power by linear search
            uint32_t p = 1;
            uint32_t k = 0;
            while (p != t.coeff) {
                p = field_.mul(p, field_.generator());
                ++k;
            }
            coeff = k == 1 ? "z" : "z^" + std::to_string(k);
        }
        std::string mono;
        if (t.exponent == 1) mono = "x";
        else if (t.exponent > 1) mono = "x^" + std::to_string(t.exponent);
        if (coeff.empty() && mono.empty()) out += "1";
        else if (coeff.empty()) out += mono;
        else if (mono.empty()) out += coeff;
        else out += coeff + "*" + mono;
    }
    return out;
}

UnivariatePoly UnivariatePoly::parse(const FieldSpec& field, std::string_view text,
                                     std::optional<uint32_t> z_value) {
    const uint32_t z = z_value.value_or(field.generator());
    std::vector<PolyTerm> terms;

    size_t i = 0;
    const auto skip_ws = [&] { while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i; };
    const auto parse_number = [&]() -> uint64_t {
        const size_t start = i;
        while (i < text.size() && std::isdigit(uint8_t(text[i]))) ++i;
        if (start == i) throw ParseError("expected a decimal exponent", i);
        uint64_t v = 0;
        for (size_t j = start; j < i; ++j) {
            v = v * 10 + uint64_t(text[j] - '0');
            if (v > (uint64_t(1) << 32)) throw ParseError("exponent too large", start);
        }
        return v;
    };

    skip_ws();
    if (i >= text.size()) throw ParseError("empty polynomial", 0);
    while (true) {
        // one term: product of z/x/1 factors
        uint64_t z_exp = 0;
        uint64_t x_exp = 0;
        bool expect_factor = true;
        while (true) {
            skip_ws();
            if (expect_factor) {
                if (i >= text.size()) throw ParseError("expected a factor", i);
                const char c = text[i];
                if (c == 'z' || c == 'Z') {
                    ++i;
                    skip_ws();
                    if (i < text.size() && text[i] == '^') {
                        ++i;
                        skip_ws();
                        z_exp += parse_number();
                    } else {
                        z_exp += 1;
                    }
                } else if (c == 'x' || c == 'X') {
                    ++i;
                    skip_ws();
                    if (i < text.size() && text[i] == '^') {
                        ++i;
                        skip_ws();
                        x_exp += parse_number();
                    } else {
                        x_exp += 1;
                    }
                } else if (c == '1') {
                    ++i;  // multiplicative identity
                } else {
                    throw ParseError("expected 'z', 'x' or '1'", i);
                }
                expect_factor = false;
            } else {
                if (i < text.size() && text[i] == '*') {
                    ++i;
                    expect_factor = true;
                } else {
                    break;
                }
            }
        }
        if (x_exp > field.size() - 1)
            throw ParseError("x-exponent out of range [0, 2^n-1]", i);
        terms.push_back(PolyTerm{field.pow(z, z_exp), uint32_t(x_exp)});

        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '+') throw ParseError("expected '+' between terms", i);
        ++i;
    }
    return UnivariatePoly(field, std::move(terms));
}

VectorialFunc compile(const UnivariatePoly& p) {
    const FieldSpec& field = p.field();
    std::vector<uint32_t> outputs(field.size());
    for (uint32_t x = 0; x < field.size(); ++x) outputs[x] = p.evaluate(x);
    return VectorialFunc{field.n(), std::move(outputs)};
}

}  // namespace bfa
