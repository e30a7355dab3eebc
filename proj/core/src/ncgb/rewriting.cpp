#include "cadef/ncgb/rewriting.hpp"

#include <algorithm>
#include <map>

#include "cadef/error.hpp"

namespace cadef::ncgb {
namespace {

Rule orient(const NCPoly& p, const WeightedDeglexOrder& order, const Alphabet& alphabet) {
  const Word& lead = p.leading_word(order);
  UniPoly c = p.coeff(lead);
  if (!c.is_constant()) {
    throw Error(ErrorCode::NonUnitLeadingCoefficient,
                "relation " + p.to_string(alphabet) + " has leading coefficient " + c.to_string() +
                    " on " + alphabet.render(lead));
  }
  Rational inv = c.constant_term().inverse();
  NCPoly monic = p.scaled(UniPoly(inv));
  Rule r{lead, monic - NCPoly::monomial(lead)};
  return r;
}

void sort_rules(std::vector<Rule>& rules, const WeightedDeglexOrder& order) {
  std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) { return order.less(a.lead, b.lead); });
}

}  // namespace

RewritingSystem::RewritingSystem(Alphabet alphabet, WeightedDeglexOrder order, std::size_t degree_bound,
                                 std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), degree_bound_(degree_bound), rules_(std::move(rules)) {
  if (order_.weights().size() != alphabet_.size())
    throw Error(ErrorCode::InvalidInput, "monomial order does not match the alphabet");
}

RewritingSystem RewritingSystem::from_relations(const Alphabet& alphabet, const WeightedDeglexOrder& order,
                                                std::size_t degree_bound, const std::vector<NCPoly>& relations) {
  std::vector<Rule> rules;
  for (const auto& p : relations) {
    if (p.is_zero()) continue;
    if (p.max_length() > degree_bound)
      throw Error(ErrorCode::DegreeBoundExceeded, "relation longer than degree bound " + std::to_string(degree_bound));
    rules.push_back(orient(p, order, alphabet));
  }
  return RewritingSystem(alphabet, order, degree_bound, std::move(rules));
}

std::vector<NCPoly> RewritingSystem::relations() const {
  std::vector<NCPoly> out;
  for (const auto& r : rules_) out.push_back(r.relation());
  return out;
}

std::vector<Word> RewritingSystem::leading_words() const {
  std::vector<Word> out;
  for (const auto& r : rules_) out.push_back(r.lead);
  return out;
}

bool RewritingSystem::reducible(const Word& w) const {
  return std::any_of(rules_.begin(), rules_.end(),
                     [&](const Rule& r) { return find_subword(w, r.lead) != std::string::npos; });
}

RewritingSystem RewritingSystem::specialize(const Rational& at) const {
  std::vector<Rule> rules;
  for (const auto& r : rules_) rules.push_back(Rule{r.lead, r.tail.specialize(at)});
  return RewritingSystem(alphabet_, order_, degree_bound_, std::move(rules));
}

bool RewritingSystem::has_constant_coefficients() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.tail.has_constant_coefficients(); });
}

const NCPoly& Reducer::reduce_word(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  if (w.size() > system_->degree_bound()) {
    throw Error(ErrorCode::DegreeBoundExceeded, "reduction reached word " + system_->alphabet().render(w) +
                                                    " beyond degree bound " +
                                                    std::to_string(system_->degree_bound()));
  }
  std::size_t best_pos = std::string::npos;
  const Rule* best = nullptr;
  for (const auto& r : system_->rules()) {
    std::size_t p = find_subword(w, r.lead);
    if (p < best_pos) {
      best_pos = p;
      best = &r;
    }
  }
  NCPoly result;
  if (best == nullptr) {
    result = NCPoly::monomial(w);
  } else {
    Word left(w.begin(), w.begin() + std::ptrdiff_t(best_pos));
    Word right(w.begin() + std::ptrdiff_t(best_pos + best->lead.size()), w.end());
    for (const auto& [u, c] : best->tail.terms()) {
      const NCPoly& sub = reduce_word(concat(left, u, right));
      UniPoly factor = -c;
      for (const auto& [v, d] : sub.terms()) result.add_term(v, factor * d);
    }
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

NCPoly Reducer::reduce(const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    const NCPoly& nf = reduce_word(w);
    for (const auto& [v, d] : nf.terms()) out.add_term(v, c * d);
  }
  return out;
}

NCPoly normal_form(const NCPoly& p, const RewritingSystem& system) {
  Reducer r(system);
  return r.reduce(p);
}

std::vector<CriticalPair> critical_pairs(const RewritingSystem& system) {
  std::vector<CriticalPair> out;
  const auto& rules = system.rules();
  std::size_t bound = system.degree_bound();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lead;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lead;
      std::size_t max_k = std::min(l1.size(), l2.size());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (!std::equal(l1.end() - std::ptrdiff_t(k), l1.end(), l2.begin())) continue;
        Word suffix(l2.begin() + std::ptrdiff_t(k), l2.end());
        Word prefix(l1.begin(), l1.end() - std::ptrdiff_t(k));
        Word word = concat(l1, suffix);
        if (word.size() > bound) continue;
        CriticalPair cp;
        cp.word = word;
        cp.reduction1 = (-rules[i].tail).sandwich({}, suffix);
        cp.reduction2 = (-rules[j].tail).sandwich(prefix, {});
        cp.rule1 = i;
        cp.rule2 = j;
        out.push_back(std::move(cp));
      }
      if (i != j && l2.size() <= l1.size()) {
        std::size_t p = find_subword(l1, l2);
        while (p != std::string::npos) {
          Word prefix(l1.begin(), l1.begin() + std::ptrdiff_t(p));
          Word suffix(l1.begin() + std::ptrdiff_t(p + l2.size()), l1.end());
          CriticalPair cp;
          cp.word = l1;
          cp.reduction1 = -rules[i].tail;
          cp.reduction2 = (-rules[j].tail).sandwich(prefix, suffix);
          cp.rule1 = i;
          cp.rule2 = j;
          cp.inclusion = true;
          out.push_back(std::move(cp));
          p = find_subword(l1, l2, p + 1);
        }
      }
    }
  }
  return out;
}

bool verify_confluent(const RewritingSystem& system) {
  Reducer red(system);
  for (const auto& cp : critical_pairs(system)) {
    if (!red.reduce(cp.reduction1 - cp.reduction2).is_zero()) return false;
  }
  return true;
}

RewritingSystem interreduce(const RewritingSystem& system) {
  std::vector<Rule> rules = system.rules();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<Rule> others;
      for (std::size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      RewritingSystem tmp(system.alphabet(), system.order(), system.degree_bound(), others);
      NCPoly p = normal_form(rules[i].relation(), tmp);
      if (p.is_zero()) {
        rules.erase(rules.begin() + std::ptrdiff_t(i));
        changed = true;
        break;
      }
      Rule r = orient(p, system.order(), system.alphabet());
      if (!(r == rules[i])) {
        rules[i] = std::move(r);
        changed = true;
      }
    }
  }
  sort_rules(rules, system.order());
  return RewritingSystem(system.alphabet(), system.order(), system.degree_bound(), std::move(rules));
}

RewritingSystem complete(const RewritingSystem& system) {
  RewritingSystem current = interreduce(system);
  while (true) {
    Reducer red(current);
    std::vector<NCPoly> fresh;
    for (const auto& cp : critical_pairs(current)) {
      NCPoly h = red.reduce(cp.reduction1 - cp.reduction2);
      if (h.is_zero()) continue;
      // Keep only genuinely new leading words within one pass.
      bool duplicate = false;
      for (const auto& f : fresh)
        if (f.leading_word(current.order()) == h.leading_word(current.order())) duplicate = true;
      if (!duplicate) fresh.push_back(std::move(h));
    }
    if (fresh.empty()) return current;
    std::vector<Rule> rules = current.rules();
    for (const auto& h : fresh) rules.push_back(orient(h, current.order(), current.alphabet()));
    current = interreduce(RewritingSystem(current.alphabet(), current.order(), current.degree_bound(), rules));
  }
}

std::vector<Word> normal_monomials(const RewritingSystem& system) {
  std::vector<Word> result;
  std::vector<Word> frontier{Word{}};
  std::size_t bound = system.degree_bound();
  for (std::size_t len = 0; len <= bound && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (auto& w : frontier) {
      if (system.reducible(w)) continue;
      if (len == bound) {
        throw Error(ErrorCode::PossiblyInfiniteDimensional,
                    "irreducible word " + system.alphabet().render(w) + " reaches the degree bound");
      }
      for (std::size_t g = 0; g < system.alphabet().size(); ++g) {
        Word e = w;
        e.push_back(Letter(g));
        next.push_back(std::move(e));
      }
      result.push_back(std::move(w));
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end(), [&](const Word& a, const Word& b) { return system.order().less(a, b); });
  return result;
}

std::vector<UniPoly> Quotient::coordinates(const NCPoly& p, Reducer& reducer) const {
  std::vector<UniPoly> out(basis.size());
  NCPoly nf = reducer.reduce(p);
  for (const auto& [w, c] : nf.terms()) {
    std::size_t idx = std::size_t(std::find(basis.begin(), basis.end(), w) - basis.begin());
    if (idx == basis.size()) throw Error(ErrorCode::InvalidInput, "normal form word outside the basis");
    out[idx] = c;
  }
  return out;
}

Quotient quotient_structure_constants(const RewritingSystem& system) {
  Quotient q;
  q.basis = normal_monomials(system);
  std::size_t d = q.basis.size();
  std::map<Word, std::uint32_t> index;
  for (std::size_t i = 0; i < d; ++i) index.emplace(q.basis[i], std::uint32_t(i));
  Reducer red(system);
  std::vector<PolyAlgebra::Sparse> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const NCPoly& nf = red.reduce_word(concat(q.basis[i], q.basis[j]));
      auto& cell = table[i * d + j];
      for (const auto& [w, c] : nf.terms()) {
        auto it = index.find(w);
        if (it == index.end()) throw Error(ErrorCode::InvalidInput, "normal form word outside the basis");
        cell.emplace_back(it->second, c);
      }
      std::sort(cell.begin(), cell.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }
  std::vector<std::string> labels;
  for (const auto& w : q.basis) labels.push_back(system.alphabet().render(w));
  q.algebra = PolyAlgebra(d, std::move(table), std::move(labels));
  return q;
}

FDAlgebra quotient_algebra(const RewritingSystem& system) {
  Quotient q = quotient_structure_constants(system);
  return q.algebra.map_coefficients<Rational>([](const UniPoly& c) {
    if (!c.is_constant())
      throw Error(ErrorCode::InvalidInput, "structure constant " + c.to_string() + " depends on the parameter");
    return c.constant_term();
  });
}

}  // namespace cadef::ncgb
