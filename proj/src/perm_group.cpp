#include "nec/perm_group.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace nec {

// ---------------------------------------------------------------------------
// Stabilizer chain

struct PermGroup::Chain {
  struct Level {
    int base = -1;
    std::vector<Perm> gens;          // generators of this level's group
    std::vector<int> where;          // point -> index into reps, or -1
    std::vector<Perm> reps;          // coset representatives: base -> point
    std::vector<int> orbit;          // discovery order
  };

  int degree;
  std::vector<Level> levels;

  explicit Chain(int deg) : degree(deg) {}

  void rebuild_orbit(Level& lv) {
    lv.where.assign(degree, -1);
    lv.reps.clear();
    lv.orbit.clear();
    lv.where[lv.base] = 0;
    lv.reps.push_back(Perm::identity(degree));
    lv.orbit.push_back(lv.base);
    for (std::size_t t = 0; t < lv.orbit.size(); ++t) {
      int pt = lv.orbit[t];
      for (const auto& g : lv.gens) {
        int im = g.apply(pt);
        if (lv.where[im] < 0) {
          lv.where[im] = static_cast<int>(lv.reps.size());
          lv.reps.push_back(lv.reps[lv.where[pt]] * g);
          lv.orbit.push_back(im);
        }
      }
    }
  }

  // Strip p through the chain from `from`; returns the residue and the level
  // reached.
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
      const Level& lv = levels[l];
      int im = p.apply(lv.base);
      if (lv.where[im] < 0) return {p, l};
      p = p * lv.reps[lv.where[im]].inverse();
    }
    return {p, levels.size()};
  }

  static int smallest_moved(const Perm& p) {
    for (int i = 0; i < p.degree(); ++i)
      if (p.apply(i) != i) return i;
    return -1;
  }

  // Incremental Schreier-Sims: add a generator known to fix the bases of all
  // levels before `level`.
  void add_generator(const Perm& p, std::size_t level) {
    if (p.is_identity()) return;
    auto [res, at] = strip(p, level);
    if (res.is_identity()) return;
    if (at == levels.size()) {
      Level lv;
      lv.base = smallest_moved(res);
      levels.push_back(std::move(lv));
    }
    levels[at].gens.push_back(res);
    rebuild_orbit(levels[at]);
    // close the level under Schreier generators
    for (std::size_t t = 0; t < levels[at].orbit.size(); ++t) {
      int pt = levels[at].orbit[t];
      const Perm& rep = levels[at].reps[levels[at].where[pt]];
      for (const auto& g : levels[at].gens) {
        const Perm& rep2 = levels[at].reps[levels[at].where[g.apply(pt)]];
        Perm schreier = rep * g * rep2.inverse();
        if (!schreier.is_identity()) add_generator(schreier, at + 1);
      }
    }
  }

  long long order() const {
    long long o = 1;
    for (const auto& lv : levels) o *= static_cast<long long>(lv.reps.size());
    return o;
  }

  bool contains(const Perm& p) const {
    auto [res, at] = strip(p, 0);
    (void)at;
    return res.is_identity();
  }
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators, int degree_cap)
    : degree_(degree) {
  if (degree < 0 || degree > degree_cap)
    throw std::invalid_argument("degree " + std::to_string(degree) +
                                " outside cap " + std::to_string(degree_cap));
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
}

PermGroup::Chain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!chain_) {
    auto c = std::make_shared<Chain>(degree_);
    for (const auto& g : gens_) c->add_generator(g, 0);
    chain_ = std::move(c);
  }
  return *chain_;
}

long long PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch");
  return chain().contains(p);
}

std::vector<Perm> PermGroup::elements(std::size_t limit) const {
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree_);
  queue.push_back(id);
  seen.insert(id);
  while (!queue.empty()) {
    Perm p = queue.front();
    queue.pop_front();
    out.push_back(p);
    if (out.size() > limit) throw std::runtime_error("group too large to enumerate");
    for (const auto& g : gens_) {
      Perm q = p * g;
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return out;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  std::vector<Perm> closure_gens;
  PermGroup current(g.degree(), {});
  auto add = [&](const Perm& p) {
    if (!p.is_identity() && !current.contains(p)) {
      closure_gens.push_back(p);
      current = PermGroup(g.degree(), closure_gens);
      return true;
    }
    return false;
  };
  for (const auto& s : seeds) {
    if (s.degree() != g.degree()) throw std::invalid_argument("seed degree mismatch");
    add(s);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> snapshot = closure_gens;
    for (const auto& r : snapshot)
      for (const auto& x : g.generators())
        if (add(x.inverse() * r * x)) changed = true;
  }
  return current;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j)
      if (i != j)
        comms.push_back(gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j]);
  return normal_closure(g, comms);
}

bool is_perfect(const PermGroup& g) {
  if (g.generators().empty()) return true; // trivial group
  return derived_subgroup(g).order() == g.order();
}

Perm DirectProduct::embed(std::size_t factor, const Perm& p) const {
  return p.shifted(offsets[factor], group.degree());
}

DirectProduct direct_product(const std::vector<PermGroup>& factors) {
  int total = 0;
  std::vector<int> offsets;
  for (const auto& f : factors) {
    offsets.push_back(total);
    total += f.degree();
  }
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto& g : factors[i].generators())
      gens.push_back(g.shifted(offsets[i], total));
  return {PermGroup(total, std::move(gens)), std::move(offsets)};
}

Perm WreathC2::element(const Perm& q1, const Perm& q2, bool swapped) const {
  int n = base_degree;
  std::vector<int> img(2 * n);
  for (int i = 0; i < n; ++i) {
    img[i] = q1.apply(i);
    img[n + i] = n + q2.apply(i);
  }
  Perm diag = Perm::from_images(std::move(img));
  return swapped ? diag * swap() : diag;
}

Perm WreathC2::swap() const {
  int n = base_degree;
  std::vector<int> img(2 * n);
  for (int i = 0; i < n; ++i) {
    img[i] = n + i;
    img[n + i] = i;
  }
  return Perm::from_images(std::move(img));
}

WreathC2 wreath_c2(const PermGroup& q) {
  int n = q.degree() == 0 ? 1 : q.degree();
  WreathC2 w{PermGroup(2 * n, {}), n};
  std::vector<Perm> gens;
  Perm id = Perm::identity(n);
  for (const auto& g : q.generators()) {
    gens.push_back(w.element(g, id, false));
    gens.push_back(w.element(id, g, false));
  }
  gens.push_back(w.swap());
  w.group = PermGroup(2 * n, std::move(gens));
  return w;
}

namespace groups {

FiniteGroupSpec cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
  int deg = m == 1 ? 1 : m;
  std::vector<int> img(deg);
  for (int i = 0; i < deg; ++i) img[i] = (i + 1) % deg;
  Perm gen = m == 1 ? Perm::identity(1) : Perm::from_images(std::move(img));
  if (gen.order() != m) throw std::logic_error("cyclic construction collapsed");
  FiniteGroupSpec spec{"cyclic(" + std::to_string(m) + ")",
                       PermGroup(deg, m == 1 ? std::vector<Perm>{} : std::vector<Perm>{gen}),
                       {gen}};
  return spec;
}

FiniteGroupSpec dihedral_presented(int exponent) {
  if (exponent < 1) throw std::invalid_argument("dihedral exponent must be >= 1");
  Perm u, v;
  int deg;
  if (exponent == 1) {
    deg = 2;
    u = v = Perm::from_cycles("(1 2)", 2);
  } else if (exponent == 2) {
    deg = 4;
    u = Perm::from_cycles("(1 2)", 4);
    v = Perm::from_cycles("(3 4)", 4);
  } else {
    // reflections of the regular exponent-gon
    deg = exponent;
    std::vector<int> iu(deg), iv(deg);
    for (int x = 0; x < deg; ++x) {
      iu[x] = (deg - x) % deg;
      iv[x] = (deg + 1 - x) % deg;
    }
    u = Perm::from_images(std::move(iu));
    v = Perm::from_images(std::move(iv));
  }
  if (u.order() != 2 || v.order() != 2 || (u * v).order() != exponent)
    throw std::logic_error("dihedral construction collapsed");
  FiniteGroupSpec spec{"dihedral(" + std::to_string(exponent) + ")",
                       PermGroup(deg, {u, v}),
                       {u, v}};
  if (spec.realized.order() != 2LL * exponent)
    throw std::logic_error("dihedral order mismatch");
  return spec;
}

FiniteGroupSpec explicit_group(int degree, std::vector<Perm> gens) {
  PermGroup g(degree, gens);
  return {"explicit", std::move(g), std::move(gens)};
}

} // namespace groups

} // namespace nec
