#include "seqnorm/space.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "seqnorm/norm.hpp"

namespace seqnorm {

double FundamentalRule::operator()(std::size_t n) const {
  if (is_power()) return std::pow(static_cast<double>(n), a_);
  return fundamental(space_, n).value;
}

SpacePtr SpaceDescriptor::lp(double p) {
  if (!(p >= 1.0)) throw InvalidDescriptorError("lp: p must be >= 1 or inf");
  return std::make_shared<SpaceDescriptor>(Lp{p});
}

SpacePtr SpaceDescriptor::lorentz_pq(double p, double q) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw InvalidDescriptorError("lorentz: p must be finite and > 1");
  if (!(q >= 1.0)) throw InvalidDescriptorError("lorentz: q must be >= 1 or inf");
  return std::make_shared<SpaceDescriptor>(LorentzPQ{p, q});
}

SpacePtr SpaceDescriptor::lorentz_d(WeightRule w, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw InvalidDescriptorError("dwp: p must be finite and >= 1");
  return std::make_shared<SpaceDescriptor>(LorentzD{w, p});
}

SpacePtr SpaceDescriptor::orlicz(OrliczFunction phi) {
  return std::make_shared<SpaceDescriptor>(Orlicz{phi});
}

SpacePtr SpaceDescriptor::marcinkiewicz(FundamentalRule lambda) {
  if (lambda.is_power() &&
      (lambda.power_exponent() < 0.0 || lambda.power_exponent() > 1.0))
    throw InvalidDescriptorError("marc: power exponent must lie in [0, 1]");
  return std::make_shared<SpaceDescriptor>(Marcinkiewicz{std::move(lambda)});
}

SpacePtr SpaceDescriptor::dual(SpacePtr inner) {
  if (!inner) throw InvalidDescriptorError("dual: missing inner space");
  return std::make_shared<SpaceDescriptor>(DualOf{std::move(inner)});
}

SpacePtr SpaceDescriptor::power(SpacePtr inner, double r) {
  if (!inner) throw InvalidDescriptorError("power: missing inner space");
  if (!(r > 0.0) || !std::isfinite(r))
    throw InvalidDescriptorError("power: exponent must be positive");
  // E^r needs the max(1,r)-convexity attestation of E
  if (flags(inner).convexity_one < std::max(1.0, r) - 1e-12)
    throw InvalidDescriptorError(
        "power: inner space lacks the max(1,r)-convexity attestation");
  return std::make_shared<SpaceDescriptor>(PowerOf{std::move(inner), r});
}

SpacePtr SpaceDescriptor::multiplier(SpacePtr from, SpacePtr to) {
  if (!from || !to) throw InvalidDescriptorError("mult: missing argument");
  return std::make_shared<SpaceDescriptor>(MultiplierOf{std::move(from), std::move(to)});
}

namespace {

double conjugate(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

/// p such that the space is exactly l_p (covers Orlicz power functions and
/// trivial Lorentz parameters).
std::optional<double> lp_exponent(const SpacePtr& s) {
  if (const auto* lp = s->as<Lp>()) return lp->p;
  if (const auto* o = s->as<Orlicz>()) return o->phi.exponent();
  if (const auto* l = s->as<LorentzPQ>())
    if (l->q == l->p) return l->p;
  if (const auto* d = s->as<LorentzD>())
    if (d->w.alpha() == 0.0) return d->p;
  return std::nullopt;
}

}  // namespace

SpaceFlags flags(const SpacePtr& space) {
  const SpacePtr s = simplify(space);
  SpaceFlags f;
  if (auto p = lp_exponent(s)) {
    f.convexity_one = *p;
    f.two_concave = *p <= 2.0;
    if (f.two_concave) f.m2_constant = 1.0;
    f.two_convex_one = *p >= 2.0;
    return f;
  }
  if (const auto* l = s->as<LorentzPQ>()) {
    f.normed = l->q <= l->p;
    f.convexity_one = f.normed ? l->q : 1.0;
    f.two_concave = l->p < 2.0 && l->q <= 2.0;  // Creekmore, constant unknown
    return f;
  }
  if (const auto* d = s->as<LorentzD>()) {
    f.convexity_one = d->p;
    f.two_concave = d->p < 2.0;  // Reisner, constant unknown
    return f;
  }
  if (s->as<Orlicz>() || s->as<Marcinkiewicz>()) return f;
  if (const auto* du = s->as<DualOf>()) {
    SpaceFlags fi = flags(du->inner);
    f.two_convex_one = fi.two_concave && fi.m2_constant == 1.0;
    f.two_concave = fi.two_convex_one;
    if (f.two_concave) f.m2_constant = 1.0;
    f.convexity_one = f.two_convex_one ? 2.0 : 1.0;
    return f;
  }
  if (const auto* pw = s->as<PowerOf>()) {
    // E^r is 1/min(1,r)-convex
    f.convexity_one = std::max(1.0, 1.0 / std::min(1.0, pw->r));
    f.two_convex_one = f.convexity_one >= 2.0;
    return f;
  }
  if (const auto* m = s->as<MultiplierOf>()) {
    auto from_p = lp_exponent(simplify(m->from));
    if (from_p && *from_p == 2.0 && flags(m->to).two_concave) {
      f.two_convex_one = flags(m->to).m2_constant == 1.0;
      f.convexity_one = f.two_convex_one ? 2.0 : 1.0;
    }
    return f;
  }
  return f;
}

SpacePtr simplify(const SpacePtr& space) {
  const auto& v = space->variant();
  if (const auto* o = std::get_if<Orlicz>(&v)) {
    (void)o;
    return space;  // Orlicz keeps its gauge; l_p equivalences resolve in hooks
  }
  if (const auto* du = std::get_if<DualOf>(&v)) {
    SpacePtr inner = simplify(du->inner);
    if (auto p = lp_exponent(inner)) return SpaceDescriptor::lp(conjugate(*p));
    if (const auto* dd = inner->as<DualOf>())
      return simplify(dd->inner);  // maximality: second Koethe dual is E
    if (inner == du->inner) return space;
    return SpaceDescriptor::dual(inner);
  }
  if (const auto* pw = std::get_if<PowerOf>(&v)) {
    SpacePtr inner = simplify(pw->inner);
    if (pw->r == 1.0) return inner;
    if (auto p = lp_exponent(inner)) return SpaceDescriptor::lp(*p / pw->r);
    if (const auto* pp = inner->as<PowerOf>())
      return simplify(SpaceDescriptor::power(pp->inner, pp->r * pw->r));
    if (inner == pw->inner) return space;
    return SpaceDescriptor::power(inner, pw->r);
  }
  if (const auto* m = std::get_if<MultiplierOf>(&v)) {
    SpacePtr from = simplify(m->from);
    SpacePtr to = simplify(m->to);
    if (space_equal(from, to)) return SpaceDescriptor::lp(kInf);
    auto to_p = lp_exponent(to);
    if (to_p && *to_p == 1.0) return simplify(SpaceDescriptor::dual(from));
    auto from_p = lp_exponent(from);
    if (from_p && *from_p == 2.0) {
      if (to_p && *to_p <= 2.0)
        return SpaceDescriptor::lp(1.0 / (1.0 / *to_p - 0.5));
      if (const auto* l = to->as<LorentzPQ>();
          l && l->p < 2.0 && l->q <= 2.0) {
        double pt = 1.0 / (1.0 / l->p - 0.5);
        double qt = l->q == 2.0 ? kInf : 1.0 / (1.0 / l->q - 0.5);
        return SpaceDescriptor::lorentz_pq(pt, qt);
      }
      if (const auto* d = to->as<LorentzD>(); d && d->p < 2.0) {
        double scale = 2.0 / (2.0 - d->p);
        return SpaceDescriptor::lorentz_d(WeightRule(d->w.alpha() * scale),
                                          d->p * scale);
      }
    }
    if (from == m->from && to == m->to) return space;
    return SpaceDescriptor::multiplier(from, to);
  }
  return space;
}

namespace {

std::string fmt_num(double v) {
  if (std::isinf(v)) return "inf";
  if (v == static_cast<double>(static_cast<long long>(v)) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string print_space(const SpacePtr& space) {
  const auto& v = space->variant();
  if (const auto* lp = std::get_if<Lp>(&v)) return "lp(" + fmt_num(lp->p) + ")";
  if (const auto* l = std::get_if<LorentzPQ>(&v))
    return "lorentz(" + fmt_num(l->p) + "," + fmt_num(l->q) + ")";
  if (const auto* d = std::get_if<LorentzD>(&v))
    return "dwp(pow(" + fmt_num(d->w.alpha()) + ")," + fmt_num(d->p) + ")";
  if (const auto* o = std::get_if<Orlicz>(&v))
    return "orlicz(power(" + fmt_num(o->phi.exponent()) + "))";
  if (const auto* m = std::get_if<Marcinkiewicz>(&v)) {
    if (m->lambda.is_power())
      return "marc(pow(" + fmt_num(m->lambda.power_exponent()) + "))";
    return "marc(of(" + print_space(m->lambda.space()) + "))";
  }
  if (const auto* du = std::get_if<DualOf>(&v))
    return "dual(" + print_space(du->inner) + ")";
  if (const auto* pw = std::get_if<PowerOf>(&v))
    return "power(" + print_space(pw->inner) + "," + fmt_num(pw->r) + ")";
  const auto& mu = std::get<MultiplierOf>(v);
  return "mult(" + print_space(mu.from) + "," + print_space(mu.to) + ")";
}

bool space_equal(const SpacePtr& a, const SpacePtr& b) {
  return print_space(a) == print_space(b);
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw InvalidDescriptorError("parse error at position " +
                                 std::to_string(pos) + ": " + what);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return text.substr(start, pos - start);
  }

  double number() {
    skip_ws();
    if (text.compare(pos, 3, "inf") == 0) {
      pos += 3;
      return kInf;
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '.' || text[pos] == '-' || text[pos] == '+' ||
            text[pos] == 'e' || text[pos] == 'E'))
      ++pos;
    if (pos == start) fail("expected number");
    double num = 0.0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, num);
    if (res.ec != std::errc() || res.ptr != text.data() + pos)
      fail("malformed number");
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      double den = number();
      if (den == 0.0) fail("zero denominator");
      return num / den;
    }
    return num;
  }

  WeightRule weight_rule() {
    std::string name = ident();
    if (name != "pow") fail("expected weight rule 'pow(alpha)'");
    expect('(');
    double a = number();
    expect(')');
    return WeightRule(a);
  }

  OrliczFunction orlicz_function() {
    std::string name = ident();
    if (name != "power") fail("expected orlicz family 'power(p)'");
    expect('(');
    double p = number();
    expect(')');
    return OrliczFunction(p);
  }

  FundamentalRule fundamental_rule() {
    std::string name = ident();
    if (name == "pow") {
      expect('(');
      double a = number();
      expect(')');
      return FundamentalRule::power(a);
    }
    if (name == "of") {
      expect('(');
      SpacePtr s = space();
      expect(')');
      return FundamentalRule::of(std::move(s));
    }
    fail("expected marcinkiewicz rule 'pow(a)' or 'of(space)'");
  }

  SpacePtr space() {
    std::string name = ident();
    expect('(');
    SpacePtr out;
    if (name == "lp") {
      out = SpaceDescriptor::lp(number());
    } else if (name == "lorentz") {
      double p = number();
      expect(',');
      out = SpaceDescriptor::lorentz_pq(p, number());
    } else if (name == "dwp") {
      WeightRule w = weight_rule();
      expect(',');
      out = SpaceDescriptor::lorentz_d(w, number());
    } else if (name == "orlicz") {
      out = SpaceDescriptor::orlicz(orlicz_function());
    } else if (name == "marc") {
      out = SpaceDescriptor::marcinkiewicz(fundamental_rule());
    } else if (name == "dual") {
      out = SpaceDescriptor::dual(space());
    } else if (name == "power") {
      SpacePtr inner = space();
      expect(',');
      out = SpaceDescriptor::power(std::move(inner), number());
    } else if (name == "mult") {
      SpacePtr from = space();
      expect(',');
      out = SpaceDescriptor::multiplier(std::move(from), space());
    } else {
      fail("unknown space '" + name + "'");
    }
    expect(')');
    return out;
  }
};

}  // namespace

SpacePtr parse_space(const std::string& text) {
  Parser p(text);
  SpacePtr s = p.space();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return s;
}

}  // namespace seqnorm
