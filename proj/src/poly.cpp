#include "cubiclines/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cubiclines {

VarContext::VarContext()
    : names_(std::make_shared<const std::vector<std::string>>()) {}

VarContext::VarContext(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  if (names_->size() >= 32) {
    throw InvalidInputError("variable contexts are limited to 31 variables");
  }
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

VarContext VarContext::without(const std::vector<std::size_t>& drop) const {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
      kept.push_back(name(i));
    }
  }
  return VarContext(std::move(kept));
}

bool VarContext::operator==(const VarContext& o) const {
  return names_ == o.names_ || *names_ == *o.names_;
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint32_t e) {
  std::vector<std::uint32_t> exps(nvars, 0);
  exps[i] = e;
  return Monomial(std::move(exps));
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::uint32_t> exps(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) exps[i] = e_[i] + o.e_[i];
  return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > m.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  std::vector<std::uint32_t> exps(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) exps[i] = e_[i] - d.e_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
  std::vector<std::uint32_t> exps(x.e_.size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(x.e_[i], y.e_[i]);
  return Monomial(std::move(exps));
}

bool Monomial::coprime_with(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  }
  return true;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0) m |= (1u << i);
  }
  return m;
}

int mono_cmp(const Monomial& x, const Monomial& y, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < x.nvars(); ++i) {
      if (x.exp(i) != y.exp(i)) return x.exp(i) > y.exp(i) ? 1 : -1;
    }
    return 0;
  }
  std::uint32_t dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx > dy ? 1 : -1;
  for (std::size_t i = x.nvars(); i-- > 0;) {
    if (x.exp(i) != y.exp(i)) return x.exp(i) < y.exp(i) ? 1 : -1;
  }
  return 0;
}

MPoly MPoly::zero(const VarContext& ctx, MonomialOrder order) {
  MPoly p;
  p.ctx_ = ctx;
  p.order_ = order;
  return p;
}

MPoly MPoly::constant(const VarContext& ctx, MonomialOrder order, FieldElement c) {
  MPoly p = zero(ctx, order);
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(ctx.size()), std::move(c)});
  return p;
}

MPoly MPoly::variable(const VarContext& ctx, std::size_t i, MonomialOrder order) {
  MPoly p = zero(ctx, order);
  p.terms_.push_back({Monomial::var(ctx.size(), i), FieldElement(1)});
  return p;
}

MPoly MPoly::from_terms(const VarContext& ctx, MonomialOrder order,
                        std::vector<Term> terms) {
  MPoly p = zero(ctx, order);
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, order) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

MPoly MPoly::from_sorted_terms(const VarContext& ctx, MonomialOrder order,
                               std::vector<Term> terms) {
  MPoly p = zero(ctx, order);
  p.terms_ = std::move(terms);
  return p;
}

const Term& MPoly::leading_term() const {
  if (terms_.empty()) throw InvalidInputError("leading term of zero polynomial");
  return terms_.front();
}

MPoly MPoly::tail() const {
  MPoly p = zero(ctx_, order_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

void MPoly::require_compatible(const MPoly& o) const {
  if (ctx_ != o.ctx_) {
    throw ContextMismatchError("polynomials from different variable contexts");
  }
  if (order_ != o.order_) {
    throw ContextMismatchError("polynomials with different monomial orders");
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  require_compatible(o);
  return axpy(*this, FieldElement(1), Monomial::one(ctx_.size()), o);
}

MPoly MPoly::operator-(const MPoly& o) const {
  require_compatible(o);
  return axpy(*this, FieldElement(-1), Monomial::one(ctx_.size()), o);
}

MPoly MPoly::operator-() const { return scaled(FieldElement(-1)); }

MPoly MPoly::scaled(const FieldElement& c) const {
  if (c.is_zero()) return zero(ctx_, order_);
  MPoly p = zero(ctx_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

MPoly MPoly::times_term(const FieldElement& c, const Monomial& m) const {
  if (c.is_zero()) return zero(ctx_, order_);
  MPoly p = zero(ctx_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

MPoly MPoly::operator*(const MPoly& o) const {
  require_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : o.terms_) {
      out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
  }
  return from_terms(ctx_, order_, std::move(out));
}

MPoly MPoly::pow(std::uint32_t e) const {
  MPoly acc = constant(ctx_, order_, FieldElement(1));
  for (std::uint32_t k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

bool MPoly::operator==(const MPoly& o) const {
  if (ctx_ != o.ctx_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

MPoly MPoly::derivative(std::size_t var) const {
  // Dividing the surviving terms by the same variable preserves their order.
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.exp(var);
    if (e == 0) continue;
    Monomial m = t.mono.divided_by(Monomial::var(ctx_.size(), var));
    out.push_back({std::move(m), t.coeff * FieldElement(static_cast<long>(e))});
  }
  return from_sorted_terms(ctx_, order_, std::move(out));
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != ctx_.size()) {
    throw ContextMismatchError("substitution needs one image per variable");
  }
  if (ctx_.size() == 0) {
    throw ContextMismatchError("substitution into an empty context");
  }
  const VarContext& target = images[0].context();
  MonomialOrder torder = images[0].order();
  for (const auto& im : images) {
    if (im.context() != target || im.order() != torder) {
      throw ContextMismatchError("substitution images disagree on context");
    }
  }
  // Per-variable power cache.
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(MPoly::constant(target, torder, FieldElement(1)));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  MPoly acc = MPoly::zero(target, torder);
  for (const auto& t : terms_) {
    MPoly prod = MPoly::constant(target, torder, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      std::uint32_t e = t.mono.exp(v);
      if (e > 0) prod = prod * power(v, e);
    }
    acc = acc + prod;
  }
  return acc;
}

MPoly MPoly::coefficient_of(const std::vector<std::size_t>& in_vars,
                            const std::vector<std::uint32_t>& degs) const {
  if (in_vars.size() != degs.size()) {
    throw InvalidInputError("coefficient_of: one degree per selected variable");
  }
  VarContext target = ctx_.without(in_vars);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ctx_.size(); ++i) {
    if (std::find(in_vars.begin(), in_vars.end(), i) == in_vars.end()) {
      keep.push_back(i);
    }
  }
  std::vector<Term> out;
  for (const auto& t : terms_) {
    bool match = true;
    for (std::size_t k = 0; k < in_vars.size(); ++k) {
      if (t.mono.exp(in_vars[k]) != degs[k]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    std::vector<std::uint32_t> exps(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) exps[k] = t.mono.exp(keep[k]);
    out.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return from_terms(target, order_, std::move(out));
}

FieldElement MPoly::evaluate(const std::vector<FieldElement>& point) const {
  if (point.size() != ctx_.size()) {
    throw ContextMismatchError("evaluation needs one value per variable");
  }
  FieldElement acc;
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t k = 0; k < t.mono.exp(i); ++k) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

FieldElement MPoly::constant_value() const {
  if (is_zero()) return FieldElement();
  if (terms_.size() != 1 || !terms_[0].mono.is_one()) {
    throw InvalidInputError("polynomial is not constant: " + to_string());
  }
  return terms_[0].coeff;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint32_t d = terms_[0].mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

std::uint32_t MPoly::support_mask() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m |= t.mono.support_mask();
  return m;
}

MPoly MPoly::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(ctx_, order, terms_);
}

FieldTag MPoly::coefficient_tag() const {
  FieldTag tag = FieldTag::Q;
  for (const auto& t : terms_) tag = join(tag, t.coeff.tag());
  return tag;
}

MPoly axpy(const MPoly& f, const FieldElement& c, const Monomial& m,
           const MPoly& g) {
  if (c.is_zero() || g.is_zero()) return f;
  MPoly out = MPoly::zero(f.context(), f.order());
  std::vector<Term> terms;
  terms.reserve(f.num_terms() + g.num_terms());
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  std::size_t i = 0, j = 0;
  while (i < ft.size() || j < gt.size()) {
    if (j == gt.size()) {
      terms.push_back(ft[i++]);
      continue;
    }
    Monomial gm = gt[j].mono * m;
    if (i == ft.size()) {
      FieldElement v = gt[j].coeff * c;
      if (!v.is_zero()) terms.push_back({std::move(gm), std::move(v)});
      ++j;
      continue;
    }
    int cmp = mono_cmp(ft[i].mono, gm, f.order());
    if (cmp > 0) {
      terms.push_back(ft[i++]);
    } else if (cmp < 0) {
      FieldElement v = gt[j].coeff * c;
      if (!v.is_zero()) terms.push_back({std::move(gm), std::move(v)});
      ++j;
    } else {
      FieldElement v = ft[i].coeff + gt[j].coeff * c;
      if (!v.is_zero()) terms.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return MPoly::from_sorted_terms(f.context(), f.order(), std::move(terms));
}

namespace {

std::string monomial_to_string(const Monomial& m, const VarContext& ctx) {
  std::string s;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    std::uint32_t e = m.exp(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += ctx.name(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string MPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const FieldElement& c = t.coeff;
    bool negative = false;
    std::string body;
    std::string mono = monomial_to_string(t.mono, ctx_);
    if (c.is_rational()) {
      negative = c.rational_part() < 0;
      BigRational mag = abs(c.rational_part());
      if (mag == 1 && !mono.empty()) {
        body = mono;
      } else {
        body = rational_to_string(mag);
        if (!mono.empty()) body += "*" + mono;
      }
    } else if (c.rational_part() == 0) {
      negative = c.omega_part() < 0;
      BigRational mag = abs(c.omega_part());
      body = (mag == 1) ? "w" : rational_to_string(mag) + "*w";
      if (!mono.empty()) body += "*" + mono;
    } else {
      body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum Kind { Int, Ident, Omega, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Token::End, "", start};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      return {Token::Int, std::string(src_.substr(start, pos_ - start)), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      std::string text(src_.substr(start, pos_ - start));
      return {text == "w" ? Token::Omega : Token::Ident, std::move(text), start};
    }
    ++pos_;
    switch (c) {
      case '+': return {Token::Plus, "+", start};
      case '-': return {Token::Minus, "-", start};
      case '*': return {Token::Star, "*", start};
      case '^': return {Token::Caret, "^", start};
      case '/': return {Token::Slash, "/", start};
      case '(': return {Token::LParen, "(", start};
      case ')': return {Token::RParen, ")", start};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, const VarContext& ctx, MonomialOrder order,
         FieldTag allow)
      : lex_(src), ctx_(ctx), order_(order), allow_(allow) {
    advance();
  }

  MPoly parse() {
    MPoly p = expr();
    expect(Token::End, "end of input");
    return p;
  }

 private:
  Lexer lex_;
  Token tok_;
  const VarContext& ctx_;
  MonomialOrder order_;
  FieldTag allow_;

  void advance() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const std::string& what) {
    if (tok_.kind != k) {
      throw ParseError("expected " + what + ", found '" + tok_.text + "'", tok_.pos);
    }
  }

  MPoly expr() {
    bool neg = false;
    if (tok_.kind == Token::Minus) {
      neg = true;
      advance();
    } else if (tok_.kind == Token::Plus) {
      advance();
    }
    MPoly acc = term();
    if (neg) acc = -acc;
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      advance();
      MPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (tok_.kind == Token::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  MPoly factor() {
    MPoly base = primary();
    if (tok_.kind == Token::Caret) {
      advance();
      expect(Token::Int, "integer exponent");
      unsigned long e = std::stoul(tok_.text);
      if (e > 64) throw ParseError("exponent too large", tok_.pos);
      advance();
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  MPoly primary() {
    switch (tok_.kind) {
      case Token::Int: {
        BigInt num(tok_.text);
        advance();
        if (tok_.kind == Token::Slash) {
          advance();
          expect(Token::Int, "denominator");
          BigInt den(tok_.text);
          if (den == 0) throw ParseError("zero denominator", tok_.pos);
          advance();
          return MPoly::constant(ctx_, order_,
                                 FieldElement(make_rational(num, den)));
        }
        return MPoly::constant(ctx_, order_, FieldElement(BigRational(num)));
      }
      case Token::Omega: {
        if (allow_ == FieldTag::Q) {
          throw ParseError("w is not allowed over Q", tok_.pos);
        }
        advance();
        return MPoly::constant(ctx_, order_, FieldElement::omega());
      }
      case Token::Ident: {
        auto idx = ctx_.index_of(tok_.text);
        if (!idx) throw ParseError("unknown variable '" + tok_.text + "'", tok_.pos);
        advance();
        return MPoly::variable(ctx_, *idx, order_);
      }
      case Token::LParen: {
        advance();
        MPoly p = expr();
        expect(Token::RParen, "')'");
        advance();
        return p;
      }
      default:
        throw ParseError("expected a number, variable, 'w' or '('", tok_.pos);
    }
  }
};

}  // namespace

MPoly parse_poly(std::string_view text, const VarContext& ctx,
                 MonomialOrder order, FieldTag allow) {
  return Parser(text, ctx, order, allow).parse();
}

FieldElement parse_field_element(std::string_view text, FieldTag allow) {
  return parse_poly(text, VarContext(), MonomialOrder::GrevLex, allow)
      .constant_value();
}

}  // namespace cubiclines
