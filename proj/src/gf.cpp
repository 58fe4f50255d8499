#include "netarc/gf.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace netarc {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool factor_prime_power(uint64_t q, uint32_t& p, uint32_t& k) {
    if (q < 2) return false;
    uint64_t base = q;
    for (uint64_t d = 2; d * d <= base; ++d) {
        if (base % d == 0) { base = d; break; }
    }
    if (!is_prime(base)) return false;
    uint32_t e = 0;
    uint64_t rest = q;
    while (rest % base == 0) { rest /= base; ++e; }
    if (rest != 1) return false;
    p = static_cast<uint32_t>(base);
    k = e;
    return true;
}

namespace {

constexpr uint32_t kMaxOrder = 1u << 20;

// --- GF(p)[x] helpers on ascending coefficient vectors -----------------

std::vector<uint32_t> code_to_coeffs(uint64_t code, uint32_t p, uint32_t len) {
    std::vector<uint32_t> c(len, 0);
    for (uint32_t i = 0; i < len && code; ++i) {
        c[i] = static_cast<uint32_t>(code % p);
        code /= p;
    }
    return c;
}

uint64_t coeffs_to_code(const std::vector<uint32_t>& c, uint32_t p) {
    uint64_t code = 0;
    for (size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
}

int poly_deg(const std::vector<uint32_t>& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i]) return static_cast<int>(i);
    return -1;
}

// Remainder of a by monic b (both over GF(p)).
std::vector<uint32_t> poly_rem(std::vector<uint32_t> a, const std::vector<uint32_t>& b,
                               uint32_t p) {
    int db = poly_deg(b);
    for (int da = poly_deg(a); da >= db && da >= 0; da = poly_deg(a)) {
        uint32_t f = a[da];
        if (f) {
            for (int i = 0; i <= db; ++i) {
                uint64_t t = static_cast<uint64_t>(f) * b[i] % p;
                a[da - db + i] = static_cast<uint32_t>((a[da - db + i] + p - t) % p);
            }
        } else {
            a[da] = 0;
        }
    }
    return a;
}

bool poly_divides(const std::vector<uint32_t>& d, const std::vector<uint32_t>& a, uint32_t p) {
    return poly_deg(poly_rem(a, d, p)) < 0;
}

// Trial division by every monic polynomial of degree 1..deg/2; fine for the
// supported q <= 2^20 since that is at most sqrt(q) candidates.
bool poly_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
    int deg = poly_deg(m);
    if (deg < 1) return false;
    if (m[static_cast<size_t>(deg)] != 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t low = 0; low < count; ++low) {
            std::vector<uint32_t> cand = code_to_coeffs(low, p, static_cast<uint32_t>(d) + 1);
            cand[static_cast<size_t>(d)] = 1;
            if (poly_divides(cand, m, p)) return false;
        }
    }
    return true;
}

// Fixed moduli for the common small fields; everything else falls back to
// the least-code monic irreducible, which keeps element codes reproducible.
const std::vector<uint32_t>* modulus_table(uint32_t p, uint32_t k) {
    static const struct Entry {
        uint32_t p, k;
        std::vector<uint32_t> coeffs;
    } entries[] = {
        {2, 2, {1, 1, 1}},           // x^2+x+1
        {2, 3, {1, 1, 0, 1}},        // x^3+x+1
        {2, 4, {1, 1, 0, 0, 1}},     // x^4+x+1
        {2, 5, {1, 0, 1, 0, 0, 1}},  // x^5+x^2+1
        {3, 2, {1, 0, 1}},           // x^2+1
        {3, 3, {1, 2, 0, 1}},        // x^3+2x+1
        {5, 2, {1, 1, 1}},           // x^2+x+1
    };
    for (const auto& e : entries)
        if (e.p == p && e.k == k) return &e.coeffs;
    return nullptr;
}

std::vector<uint32_t> canonical_modulus(uint32_t p, uint32_t k) {
    if (k == 1) return {0, 1};
    if (const auto* t = modulus_table(p, k)) return *t;
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; ++i) count *= p;
    for (uint64_t low = 0; low < count; ++low) {
        std::vector<uint32_t> cand = code_to_coeffs(low, p, k + 1);
        cand[k] = 1;
        if (poly_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> f;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

}  // namespace

// --- Field -------------------------------------------------------------

FieldPtr Field::make(uint32_t p, uint32_t k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field degree must be >= 1");
    return make(p, k, canonical_modulus(p, k));
}

FieldPtr Field::make(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
    }
    if (modulus.size() != static_cast<size_t>(k) + 1)
        throw std::invalid_argument("modulus must have degree k");
    for (uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus[k] != 1) throw std::invalid_argument("modulus must be monic");
    if (!poly_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = static_cast<uint32_t>(q);
    f->mod_ = std::move(modulus);
    f->init_tables();
    return f;
}

FieldPtr Field::from_order(uint64_t q) {
    uint32_t p = 0, k = 0;
    if (!factor_prime_power(q, p, k))
        throw std::invalid_argument("field order must be a prime power");
    return make(p, k);
}

FieldPtr Field::parse(const std::string& s) {
    auto caret = s.find('^');
    auto slash = s.find('/');
    try {
        if (caret == std::string::npos) {
            if (slash != std::string::npos) throw std::invalid_argument("bad field descriptor");
            size_t used = 0;
            uint64_t q = std::stoull(s, &used);
            if (used != s.size()) throw std::invalid_argument("bad field descriptor");
            return from_order(q);
        }
        uint32_t p = static_cast<uint32_t>(std::stoul(s.substr(0, caret)));
        std::string rest = s.substr(caret + 1);
        if (slash == std::string::npos) {
            size_t used = 0;
            uint32_t k = static_cast<uint32_t>(std::stoul(rest, &used));
            if (used != rest.size()) throw std::invalid_argument("bad field descriptor");
            return make(p, k);
        }
        std::string kpart = s.substr(caret + 1, slash - caret - 1);
        std::string mpart = s.substr(slash + 1);
        uint32_t k = static_cast<uint32_t>(std::stoul(kpart));
        uint64_t mcode = std::stoull(mpart);
        return make(p, k, code_to_coeffs(mcode, p, k + 1));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field descriptor: " + s);
    }
}

uint64_t Field::modulus_code() const { return coeffs_to_code(mod_, p_); }

std::string Field::descriptor() const {
    std::ostringstream os;
    if (k_ == 1) {
        os << p_;
        return os.str();
    }
    os << p_ << '^' << k_;
    if (mod_ != canonical_modulus(p_, k_)) os << '/' << modulus_code();
    return os.str();
}

bool Field::same(const Field& o) const {
    return this == &o || (p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_);
}

FE Field::element(uint32_t code) const {
    if (code >= q_) throw std::invalid_argument("element code out of range");
    return FE(shared_from_this(), code);
}

FE Field::from_int(int64_t v) const {
    int64_t m = v % static_cast<int64_t>(p_);
    if (m < 0) m += p_;
    return element(static_cast<uint32_t>(m));
}

std::vector<FE> Field::elements() const {
    std::vector<FE> out;
    out.reserve(q_);
    for (uint32_t c = 0; c < q_; ++c) out.push_back(element(c));
    return out;
}

uint32_t Field::mul_generic(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    std::vector<uint32_t> ca = code_to_coeffs(a, p_, k_);
    std::vector<uint32_t> cb = code_to_coeffs(b, p_, k_);
    std::vector<uint32_t> prod(2 * k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        if (!ca[i]) continue;
        for (uint32_t j = 0; j < k_; ++j)
            prod[i + j] = static_cast<uint32_t>(
                (prod[i + j] + static_cast<uint64_t>(ca[i]) * cb[j]) % p_);
    }
    prod = poly_rem(std::move(prod), mod_, p_);
    prod.resize(k_, 0);
    return static_cast<uint32_t>(coeffs_to_code(prod, p_));
}

void Field::init_tables() {
    if (q_ <= (1u << 16)) {
        // Discrete-log tables over a generator found by order testing.
        exp_.assign(q_ - 1, 1);
        log_.assign(q_, 0);
        if (q_ > 2) {
            auto pow_gen = [this](uint32_t a, uint64_t e) {
                uint32_t r = 1;
                while (e) {
                    if (e & 1) r = mul_generic(r, a);
                    a = mul_generic(a, a);
                    e >>= 1;
                }
                return r;
            };
            std::vector<uint64_t> fac = prime_factors(q_ - 1);
            uint32_t g = 0;
            for (uint32_t c = 2; c < q_; ++c) {
                bool ok = true;
                for (uint64_t f : fac)
                    if (pow_gen(c, (q_ - 1) / f) == 1) { ok = false; break; }
                if (ok) { g = c; break; }
            }
            if (!g) throw std::logic_error("no multiplicative generator found");
            uint32_t cur = 1;
            for (uint32_t i = 0; i + 1 < q_; ++i) {
                exp_[i] = cur;
                log_[cur] = i;
                cur = mul_generic(cur, g);
            }
        } else {
            log_[1] = 0;
        }
        use_logs_ = true;

        inv_.assign(q_, 0);
        for (uint32_t a = 1; a < q_; ++a)
            inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

        frob1_.assign(q_, 0);
        for (uint32_t a = 1; a < q_; ++a)
            frob1_[a] = exp_[static_cast<uint64_t>(log_[a]) * p_ % (q_ - 1)];
    }
    if (p_ != 2 && q_ <= 256) {
        addtab_.assign(static_cast<size_t>(q_) * q_, 0);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b) {
                uint32_t s = 0, mul = 1, aa = a, bb = b;
                for (uint32_t i = 0; i < k_; ++i) {
                    s += (aa % p_ + bb % p_) % p_ * mul;
                    aa /= p_;
                    bb /= p_;
                    mul *= p_;
                }
                addtab_[static_cast<size_t>(a) * q_ + b] = s;
            }
    }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (!addtab_.empty()) return addtab_[static_cast<size_t>(a) * q_ + b];
    uint32_t s = 0, mul = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        s += (a % p_ + b % p_) % p_ * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return s;
}

uint32_t Field::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t s = 0, mul = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        s += (p_ - a % p_) % p_ * mul;
        a /= p_;
        mul *= p_;
    }
    return s;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (use_logs_) {
        if (a == 0 || b == 0) return 0;
        return exp_[(static_cast<uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
    }
    return mul_generic(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!inv_.empty()) return inv_[a];
    return pow(a, q_ - 2);
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (use_logs_ && a != 0)
        return exp_[static_cast<uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
    if (a == 0) return e == 0 ? 1 : 0;
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t Field::frob(uint32_t a, uint32_t i) const {
    if (i >= k_) throw std::invalid_argument("frobenius exponent out of range");
    if (!frob1_.empty()) {
        for (uint32_t t = 0; t < i; ++t) a = frob1_[a];
        return a;
    }
    uint64_t e = 1;
    for (uint32_t t = 0; t < i; ++t) e *= p_;
    return pow(a, e);
}

// --- FE ----------------------------------------------------------------

namespace {
const Field& need_same(const FE& a, const FE& b) {
    const auto& fa = a.field();
    const auto& fb = b.field();
    if (!fa || !fb) throw std::logic_error("uninitialized field element");
    if (!fa->same(*fb)) throw std::invalid_argument("elements from different fields");
    return *fa;
}
const Field& need(const FE& a) {
    if (!a.field()) throw std::logic_error("uninitialized field element");
    return *a.field();
}
}  // namespace

FE::FE(FieldPtr field, uint32_t code) : field_(std::move(field)), code_(code) {
    if (!field_) throw std::invalid_argument("null field");
    if (code_ >= field_->q()) throw std::invalid_argument("element code out of range");
}

FE FE::operator+(const FE& o) const {
    const Field& f = need_same(*this, o);
    return FE(field_, f.add(code_, o.code_));
}

FE FE::operator-(const FE& o) const {
    const Field& f = need_same(*this, o);
    return FE(field_, f.sub(code_, o.code_));
}

FE FE::operator-() const { return FE(field_, need(*this).neg(code_)); }

FE FE::operator*(const FE& o) const {
    const Field& f = need_same(*this, o);
    return FE(field_, f.mul(code_, o.code_));
}

FE FE::operator/(const FE& o) const {
    const Field& f = need_same(*this, o);
    return FE(field_, f.div(code_, o.code_));
}

bool FE::operator==(const FE& o) const {
    need_same(*this, o);
    return code_ == o.code_;
}

FE FE::inv() const { return FE(field_, need(*this).inv(code_)); }

FE FE::pow(uint64_t e) const { return FE(field_, need(*this).pow(code_, e)); }

FE FE::frobenius(uint32_t i) const { return FE(field_, need(*this).frob(code_, i)); }

// --- Poly --------------------------------------------------------------

Poly::Poly(FieldPtr field, std::vector<FE> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("null field");
    for (const auto& c : coeffs_)
        if (!c.field() || !c.field()->same(*field_))
            throw std::invalid_argument("coefficient from a different field");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::from_ints(const FieldPtr& field, const std::vector<int64_t>& coeffs) {
    if (!field) throw std::invalid_argument("null field");
    std::vector<FE> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(field->from_int(v));
    return Poly(field, std::move(c));
}

FE Poly::eval(const FE& x) const {
    FE acc = field_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !coeffs_[i].is_one()) os << coeffs_[i].code();
        if (i > 0) {
            if (!coeffs_[i].is_one()) os << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::vector<FE> poly_roots(const Poly& f) {
    std::vector<FE> roots;
    if (f.is_zero()) throw std::invalid_argument("root scan of the zero polynomial");
    const auto& field = f.field();
    for (uint32_t c = 0; c < field->q(); ++c) {
        FE x = field->element(c);
        if (f.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
}

std::vector<FE> subfield_elements(const FieldPtr& field, uint32_t d) {
    if (!field) throw std::invalid_argument("null field");
    if (d < 1 || field->k() % d != 0)
        throw std::invalid_argument("subfield degree must divide k");
    std::vector<FE> out;
    for (uint32_t c = 0; c < field->q(); ++c) {
        uint32_t image = c;
        for (uint32_t t = 0; t < d; ++t) image = field->frob(image, 1);
        if (image == c) out.push_back(field->element(c));
    }
    return out;
}

uint32_t min_degree_for_halfcyclotomic(uint32_t r, uint32_t p) {
    if (r < 3) throw std::invalid_argument("r must be >= 3");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (r % p == 0) throw std::invalid_argument("p must not divide r");
    uint64_t cur = p % r;
    for (uint32_t b = 1; b <= r; ++b) {
        if (cur == 1 || cur == r - 1) return b;
        cur = cur * p % r;
    }
    throw std::logic_error("order computation failed");  // unreachable
}

}  // namespace netarc
