#include "cadef/families/certificate.hpp"

#include <algorithm>

namespace cadef {

BlockClaim BlockClaim::semisimple(GeometricType type, Element idempotent, std::string selector) {
  BlockClaim c;
  c.kind = Kind::Semisimple;
  c.type = std::move(type);
  c.idempotent = std::move(idempotent);
  c.selector = std::move(selector);
  return c;
}

BlockClaim BlockClaim::named(Presentation p, std::vector<Element> images, std::string map, Element idempotent,
                             std::string selector) {
  BlockClaim c;
  c.kind = Kind::Named;
  c.presentation = std::move(p);
  c.images = std::move(images);
  c.map = std::move(map);
  c.idempotent = std::move(idempotent);
  c.selector = std::move(selector);
  return c;
}

namespace {

std::vector<std::string> labels_of(const std::vector<Factor>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.label());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_zero_element(const Element& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

Factor factor_of(const BlockClaim& c) {
  Factor f;
  if (c.kind == BlockClaim::Kind::Named) {
    f.named = true;
    f.name = c.presentation->name();
  } else {
    f.type = c.type;
  }
  return f;
}

BlockCheck check_block(const FDAlgebra& A, const Element& e, const BlockClaim& claim) {
  BlockCheck out;
  out.selector = claim.selector;
  out.factor = factor_of(claim);
  out.map_text = claim.map;
  Corner corner = corner_algebra(A, e);
  out.dim = corner.algebra.dim();
  out.radical_dim = radical(corner.algebra).dim();
  if (claim.kind == BlockClaim::Kind::Semisimple) {
    if (out.radical_dim != 0) {
      out.failure = "block " + claim.selector + " has a radical of dimension " + std::to_string(out.radical_dim);
      return out;
    }
    out.type = geometric_type(corner.algebra);
    if (!(*out.type == claim.type)) {
      out.failure = "block " + claim.selector + " has type " + out.type->to_string() + ", claimed " +
                    claim.type.to_string();
      return out;
    }
    out.ok = true;
    return out;
  }
  const Presentation& p = *claim.presentation;
  if (claim.images.size() != p.alphabet().size()) {
    out.failure = "block " + claim.selector + ": wrong number of generator images";
    return out;
  }
  std::vector<Element> local;
  for (std::size_t g = 0; g < claim.images.size(); ++g) {
    auto c = corner.coords.try_coords(claim.images[g]);
    if (!c || A.multiply(e, claim.images[g]) != claim.images[g]) {
      out.failure = "block " + claim.selector + ": image of " + p.alphabet().name(ncgb::Letter(g)) +
                    " lies outside the block";
      return out;
    }
    local.push_back(std::move(*c));
  }
  out.map = verify_algebra_map(GeneratorImageMap{p.completed(), local}, corner.algebra);
  if (out.map->verdict != MapVerdict::Isomorphism) {
    out.failure = "block " + claim.selector + " -> " + p.name() + ": " + std::string(to_string(out.map->verdict));
    if (out.map->failing_relation)
      out.failure += " (relation " + p.relation_texts().at(*out.map->failing_relation) + ")";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

bool same_factors(std::vector<Factor> a, std::vector<Factor> b) { return labels_of(a) == labels_of(b); }

GeometricType total_type(const std::vector<Factor>& factors) {
  GeometricType t;
  for (const auto& f : factors)
    if (!f.named) t += f.type;
  return t;
}

std::string describe(const std::vector<Factor>& factors) {
  std::string s;
  for (const auto& l : labels_of(factors)) s += (s.empty() ? "" : " x ") + l;
  return s.empty() ? "0" : s;
}

FiberCheck check_fiber(const FDAlgebra& A, const Rational& at, const FiberClaim& claim) {
  FiberCheck out;
  out.at = at;
  out.dim = A.dim();
  out.centre_dim = centre(A).dim();
  out.radical_dim = radical(A).dim();
  std::vector<Element> es;
  for (const auto& b : claim.blocks) es.push_back(b.idempotent.empty() ? A.unit() : b.idempotent);
  Element sum = A.zero();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string& sel = claim.blocks[i].selector;
    if (A.multiply(es[i], es[i]) != es[i]) {
      out.failure = "selector " + sel + " is not idempotent";
      return out;
    }
    if (!is_central(A, es[i])) {
      out.failure = "selector " + sel + " is not central";
      return out;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (!is_zero_element(A.multiply(es[i], es[j]))) {
        out.failure = "selectors " + claim.blocks[j].selector + " and " + sel + " are not orthogonal";
        return out;
      }
    sum = add(sum, es[i]);
  }
  if (sum != A.unit()) {
    out.failure = "block idempotents do not sum to 1";
    return out;
  }
  out.ok = true;
  for (std::size_t i = 0; i < es.size(); ++i) {
    BlockCheck b = check_block(A, es[i], claim.blocks[i]);
    out.block_dims.push_back(b.dim);
    if (!b.ok && out.ok) {
      out.ok = false;
      out.failure = b.failure;
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

namespace {

std::vector<Factor> factors_of(const FiberCheck& c) {
  std::vector<Factor> out;
  for (const auto& b : c.blocks) out.push_back(b.factor);
  return out;
}

FiberCheck run_claims(const EdgeSpec& spec, const FDAlgebra& A, const Rational& at, FiberClaim* kept) {
  try {
    FiberClaim claim = spec.claims(A, at);
    FiberCheck c = check_fiber(A, at, claim);
    if (kept) *kept = std::move(claim);
    return c;
  } catch (const Error& e) {
    FiberCheck c;
    c.at = at;
    c.dim = A.dim();
    c.failure = e.what();
    return c;
  }
}

}  // namespace

CertEdge evaluate_edge(EdgeSpec spec) {
  CertEdge edge;
  if (spec.samples.empty()) spec.samples = spec.family.samples;
  edge.spec = std::move(spec);
  const EdgeSpec& s = edge.spec;
  const PolyFamily& F = s.family;
  auto fail = [&](std::string why) {
    if (edge.failure.empty()) edge.failure = F.name + ": " + std::move(why);
  };

  FDAlgebra special = fiber(F, s.special_at);
  edge.special = run_claims(s, special, s.special_at, nullptr);
  if (special.dim() != s.source.dim())
    fail("special fiber has dimension " + std::to_string(special.dim()) + ", source has " +
         std::to_string(s.source.dim()));
  if (!edge.special.ok) fail("t = " + s.special_at.to_string() + ": " + edge.special.failure);
  else if (!same_factors(factors_of(edge.special), s.sources))
    fail("special fiber is " + describe(factors_of(edge.special)) + ", source is " + describe(s.sources));

  std::size_t usable = 0;
  for (const auto& at : s.samples) {
    if (at == s.special_at || F.is_excluded(at)) continue;
    ++usable;
    FDAlgebra A = fiber(F, at);
    FiberClaim claim;
    FiberCheck c = run_claims(s, A, at, &claim);
    if (s.aux) c.aux = s.aux(A, at);
    if (!c.ok) fail("t = " + at.to_string() + ": " + c.failure);
    else if (edge.target.empty()) edge.target = factors_of(c);
    else if (!same_factors(factors_of(c), edge.target))
      fail("t = " + at.to_string() + " gives " + describe(factors_of(c)) + ", earlier samples gave " +
           describe(edge.target));
    edge.samples.push_back(std::move(c));
    edge.sample_claims.push_back(std::move(claim));
  }
  if (usable < 2) fail("fewer than two usable sample points");
  edge.verified = edge.failure.empty();
  return edge;
}

CertEdge certify_edge(EdgeSpec spec) {
  CertEdge e = evaluate_edge(std::move(spec));
  if (!e.verified) throw Error(ErrorCode::EvidenceFailed, e.failure);
  return e;
}

std::vector<Factor> Certificate::source() const { return chain.empty() ? std::vector<Factor>{} : chain.front().spec.sources; }

std::vector<Factor> Certificate::target() const { return chain.empty() ? std::vector<Factor>{} : chain.back().target; }

bool Certificate::complete() const {
  auto t = target();
  return !t.empty() && std::none_of(t.begin(), t.end(), [](const Factor& f) { return f.named; });
}

bool Certificate::verified() const {
  return !chain.empty() && std::all_of(chain.begin(), chain.end(), [](const CertEdge& e) { return e.verified; });
}

GeometricType Certificate::target_type() const { return total_type(target()); }

Certificate compose_certificates(std::vector<CertEdge> edges) {
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!same_factors(edges[i].spec.sources, edges[i - 1].target))
      throw Error(ErrorCode::ChainMismatch, "edge " + std::to_string(i) + " starts at " +
                                                describe(edges[i].spec.sources) + " but edge " +
                                                std::to_string(i - 1) + " ends at " + describe(edges[i - 1].target));
  }
  return Certificate{std::move(edges)};
}

FDAlgebra semisimple_model(const GeometricType& type) {
  const FDAlgebra k(1, {{{0, Rational(1)}}}, {"1"});
  std::optional<FDAlgebra> out;
  for (const auto& [size, count] : type.counts) {
    if (size > 2) throw Error(ErrorCode::OutOfRange, "no model for matrix blocks of size " + std::to_string(size));
    const FDAlgebra& block = size == 1 ? k : m2_presentation().algebra();
    for (std::size_t i = 0; i < count; ++i) out = out ? direct_product(*out, block) : block;
  }
  if (!out) throw Error(ErrorCode::InvalidInput, "empty geometric type");
  return *out;
}

EdgeSpec identity_edge(const GeometricType& type) {
  FDAlgebra A = semisimple_model(type);
  EdgeSpec s;
  s.sources = {Factor{false, {}, type}};
  s.source = A;
  s.family = constant_family(type.to_string(), A);
  s.claims = [type](const FDAlgebra&, const Rational&) { return FiberClaim{{BlockClaim::semisimple(type)}}; };
  return s;
}

Certificate compose_certificates(const Certificate& first, const Certificate& then) {
  std::vector<Factor> rest = first.target();
  bool consumed = true;
  for (const auto& f : then.source()) {
    auto it = std::find(rest.begin(), rest.end(), f);
    if (it == rest.end()) {
      consumed = false;
      break;
    }
    rest.erase(it);
  }
  bool carry = consumed && !rest.empty() && std::none_of(rest.begin(), rest.end(), [](const Factor& f) { return f.named; });
  Certificate tail = carry ? product_certificate(then, Certificate{{certify_edge(identity_edge(total_type(rest)))}}) : then;
  std::vector<CertEdge> edges = first.chain;
  edges.insert(edges.end(), tail.chain.begin(), tail.chain.end());
  return compose_certificates(std::move(edges));
}

namespace {

BlockClaim embed_claim(const BlockClaim& c, const FDAlgebra& A, const FDAlgebra& B, bool left) {
  auto emb = [&](const Element& v) { return left ? embed_left(A, B, v) : embed_right(A, B, v); };
  BlockClaim out = c;
  out.idempotent = emb(c.idempotent.empty() ? (left ? A.unit() : B.unit()) : c.idempotent);
  out.selector = (left ? "L:" : "R:") + c.selector;
  for (auto& im : out.images) im = emb(im);
  return out;
}

// Stays at the final fiber of an edge, taken at its first sample.
CertEdge constant_edge(const CertEdge& last) {
  if (last.samples.empty() || !last.verified)
    throw Error(ErrorCode::EvidenceFailed, "cannot extend an unverified edge");
  Rational at = last.samples.front().at;
  FDAlgebra A = fiber(last.spec.family, at);
  FiberClaim kept = last.sample_claims.front();
  EdgeSpec s;
  s.sources = last.target;
  s.source = A;
  s.family = constant_family(last.spec.family.name + "@" + at.to_string(), A);
  s.claims = [kept](const FDAlgebra&, const Rational&) { return kept; };
  return evaluate_edge(std::move(s));
}

}  // namespace

CertEdge product_edge(const CertEdge& a, const CertEdge& b) {
  // b is reparametrized so that both special points sit at a's.
  Rational delta = b.spec.special_at - a.spec.special_at;
  EdgeSpec s;
  s.sources = a.spec.sources;
  s.sources.insert(s.sources.end(), b.spec.sources.begin(), b.spec.sources.end());
  s.source = direct_product(a.spec.source, b.spec.source, a.spec.family.name, b.spec.family.name);
  PolyFamily fb = shift_family(b.spec.family, delta);
  fb.samples.clear();
  for (const auto& x : b.samples) fb.samples.push_back(x.at - delta);
  s.family = product_family(a.spec.family, fb);
  s.special_at = a.spec.special_at;
  std::erase(s.family.samples, s.special_at);
  EdgeSpec sa = a.spec;
  EdgeSpec sb = b.spec;
  s.claims = [sa, sb, delta](const FDAlgebra& P, const Rational& at) {
    FDAlgebra fa = fiber(sa.family, at);
    FDAlgebra fb = fiber(sb.family, at + delta);
    if (!(P == direct_product(fa, fb, sa.family.name, sb.family.name)))
      throw Error(ErrorCode::EvidenceFailed, "product fiber is not the product of the fibers");
    FiberClaim out;
    for (const auto& c : sa.claims(fa, at).blocks) out.blocks.push_back(embed_claim(c, fa, fb, true));
    for (const auto& c : sb.claims(fb, at + delta).blocks) out.blocks.push_back(embed_claim(c, fa, fb, false));
    return out;
  };
  return evaluate_edge(std::move(s));
}

Certificate product_certificate(const Certificate& a, const Certificate& b) {
  if (a.chain.empty() || b.chain.empty()) throw Error(ErrorCode::InvalidInput, "empty certificate");
  std::vector<CertEdge> ea = a.chain;
  std::vector<CertEdge> eb = b.chain;
  while (ea.size() < eb.size()) ea.push_back(constant_edge(ea.back()));
  while (eb.size() < ea.size()) eb.push_back(constant_edge(eb.back()));
  std::vector<CertEdge> edges;
  for (std::size_t i = 0; i < ea.size(); ++i) edges.push_back(product_edge(ea[i], eb[i]));
  return compose_certificates(std::move(edges));
}

}  // namespace cadef
