#include "nec/quotient_search.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nec {
namespace {

std::string tuple_key(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

bool verify_polygon(const std::vector<Perm>& xs, const std::vector<int>& periods) {
  if (xs.size() != periods.size()) return false;
  Perm prod = Perm::identity(xs.empty() ? 1 : xs[0].degree());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].order() != periods[i]) return false;
    prod = prod * xs[i];
  }
  return prod.is_identity();
}

bool verify_reflection_cycle(const std::vector<Perm>& cs, const std::vector<int>& links) {
  if (cs.size() != links.size()) return false;
  int s = static_cast<int>(cs.size());
  for (const auto& c : cs)
    if (c.order() != 2) return false;
  for (int i = 1; i <= s; ++i)
    if ((cs[i - 1] * cs[i % s]).order() != links[i - 1]) return false;
  return true;
}

// random element of exact order m: one full m-cycle plus optional extra
// cycles whose lengths divide m
Perm random_of_order(Rng& rng, int degree, int m) {
  if (m == 1) return Perm::identity(degree);
  std::vector<int> pts(degree);
  for (int i = 0; i < degree; ++i) pts[i] = i;
  rng.shuffle(pts);
  std::vector<int> divisors;
  for (int d = 2; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  auto lay_cycle = [&](int start, int len) {
    for (int t = 0; t < len; ++t) img[pts[start + t]] = pts[start + (t + 1) % len];
  };
  lay_cycle(0, m);
  int at = m;
  while (at < degree && rng.below(2) == 0) {
    std::vector<int> fits;
    for (int d : divisors)
      if (at + d <= degree) fits.push_back(d);
    if (fits.empty()) break;
    int len = fits[rng.below_int(static_cast<int>(fits.size()))];
    lay_cycle(at, len);
    at += len;
  }
  return Perm::from_images(std::move(img));
}

std::optional<std::vector<Perm>> structured_polygon(const std::vector<int>& periods) {
  int r = static_cast<int>(periods.size());
  bool all_two = std::all_of(periods.begin(), periods.end(), [](int m) { return m == 2; });
  Perm u2 = Perm::from_cycles("(1 2)", 4);
  Perm v2 = Perm::from_cycles("(3 4)", 4);
  if (all_two) {
    std::vector<Perm> xs;
    if (r % 2 == 0) {
      xs.assign(r, u2);
    } else {
      xs = {u2, v2, u2 * v2};
      for (int i = 3; i < r; ++i) xs.push_back(u2);
    }
    return xs;
  }
  if (r == 3) {
    // exactly one period > 2: dihedral of that order
    int big = -1, twos = 0;
    for (int i = 0; i < 3; ++i)
      periods[i] == 2 ? ++twos : big = i;
    if (twos == 2) {
      auto dih = groups::dihedral_presented(periods[big]);
      const Perm& u = dih.named[0];
      const Perm& v = dih.named[1];
      std::vector<Perm> xs;
      if (big == 0) xs = {u * v, v, u};
      else if (big == 1) xs = {u, (u * v).inverse(), v};
      else xs = {u, v, (u * v).inverse()};
      if (verify_polygon(xs, periods)) return xs;
    }
  }
  return std::nullopt;
}

} // namespace

QuotientLookup QuotientLookup::builtin() {
  QuotientLookup lk;
  lk.polygon["2,3,3"] = {{2, 1, 4, 3}, {2, 3, 1, 4}, {4, 2, 1, 3}};
  lk.polygon["2,3,5"] = {{2, 1, 4, 3, 5}, {3, 2, 5, 4, 1}, {5, 1, 2, 3, 4}};
  lk.reflection["2,2,2"] = {{2, 1, 3, 4}, {1, 2, 4, 3}, {2, 1, 4, 3}};
  lk.reflection["3,3,3"] = {{2, 1, 3}, {1, 3, 2}, {3, 2, 1}};
  return lk;
}

QuotientLookup QuotientLookup::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lookup file: " + path);
  nlohmann::json j;
  in >> j;
  QuotientLookup lk = builtin();
  auto read_tuples = [](const nlohmann::json& obj,
                        std::map<std::string, std::vector<std::vector<int>>>& into) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
      into[it.key()] = it.value().get<std::vector<std::vector<int>>>();
  };
  if (j.contains("polygon")) read_tuples(j["polygon"], lk.polygon);
  if (j.contains("reflection")) read_tuples(j["reflection"], lk.reflection);
  if (j.contains("full"))
    for (auto it = j["full"].begin(); it != j["full"].end(); ++it)
      lk.full[it.key()] = it.value().get<std::map<std::string, std::vector<int>>>();
  return lk;
}

std::vector<Perm> find_polygon_quotient(const std::vector<int>& periods,
                                        const SearchContext& ctx) {
  int r = static_cast<int>(periods.size());
  if (r < 3) throw std::invalid_argument("polygon search needs at least 3 periods");
  for (int m : periods)
    if (m < 2) throw std::invalid_argument("periods must be >= 2");

  if (auto it = ctx.lookup.polygon.find(tuple_key(periods)); it != ctx.lookup.polygon.end()) {
    std::vector<Perm> xs;
    for (const auto& img : it->second) xs.push_back(Perm::from_one_based(img));
    if (verify_polygon(xs, periods)) return xs;
    throw std::runtime_error("lookup entry fails verification: " + tuple_key(periods));
  }

  if (auto xs = structured_polygon(periods)) return *xs;

  int max_m = *std::max_element(periods.begin(), periods.end());
  if (max_m > ctx.max_degree)
    throw SearchError("period " + std::to_string(max_m) + " exceeds max degree " +
                      std::to_string(ctx.max_degree));

  Rng rng(ctx.seed);
  int d_lo = std::max(3, max_m);
  int span = ctx.max_degree - d_lo + 1;
  for (long long attempt = 0; attempt < ctx.max_attempts; ++attempt) {
    int d = d_lo + static_cast<int>((attempt * span) / std::max<long long>(ctx.max_attempts, 1));
    if (attempt % 7 == 6) d = d_lo + rng.below_int(span);
    d = std::min(d, ctx.max_degree);
    std::vector<Perm> xs;
    Perm prod = Perm::identity(d);
    for (int i = 0; i + 1 < r; ++i) {
      xs.push_back(random_of_order(rng, d, periods[i]));
      prod = prod * xs.back();
    }
    Perm last = prod.inverse();
    if (last.order() != periods[r - 1]) continue;
    xs.push_back(last);
    if (verify_polygon(xs, periods)) return xs;
  }
  throw SearchError("polygon search exhausted for [" + tuple_key(periods) + "]");
}

std::vector<Perm> find_reflection_cycle_quotient(const std::vector<int>& links,
                                                 const SearchContext& ctx) {
  int s = static_cast<int>(links.size());
  if (s == 2)
    throw std::invalid_argument("two-link cycles use dedicated dihedral constructions");
  if (s <= 1) return {Perm::from_cycles("(1 2)", 2)};
  for (int n : links)
    if (n < 2) throw std::invalid_argument("link periods must be >= 2");

  if (auto it = ctx.lookup.reflection.find(tuple_key(links)); it != ctx.lookup.reflection.end()) {
    std::vector<Perm> cs;
    for (const auto& img : it->second) cs.push_back(Perm::from_one_based(img));
    if (verify_reflection_cycle(cs, links)) return cs;
    throw std::runtime_error("lookup entry fails verification: " + tuple_key(links));
  }

  if (std::all_of(links.begin(), links.end(), [](int n) { return n == 2; })) {
    Perm u = Perm::from_cycles("(1 2)", 4);
    Perm v = Perm::from_cycles("(3 4)", 4);
    std::vector<Perm> cs;
    if (s % 2 == 0) {
      for (int i = 0; i < s; ++i) cs.push_back(i % 2 ? v : u);
    } else {
      // u,v,...,u,v,uv: every cyclic product stays an involution
      for (int i = 0; i < s - 1; ++i) cs.push_back(i % 2 ? v : u);
      cs.push_back(u * v);
    }
    if (verify_reflection_cycle(cs, links)) return cs;
  }

  // Double a polygon solution: with W_i = X_1...X_i (W_0 = 1) and T the swap
  // of two copies of the domain, C_i = (W_i, W_i^-1) T is an involution and
  // C_{i-1} C_i = (W_{i-1} X_i^-1 W_{i-1}^-1, X_i) has exact order n_i; the
  // closing pair equals (X_s^-1, X_s).
  std::vector<Perm> xs = find_polygon_quotient(links, ctx);
  int d = xs[0].degree();
  WreathC2 w{PermGroup(2 * d, {}), d};
  std::vector<Perm> cs;
  Perm prefix = Perm::identity(d);
  for (int i = 0; i < s; ++i) {
    if (i > 0) prefix = prefix * xs[i - 1];
    cs.push_back(w.element(prefix, prefix.inverse(), true));
  }
  if (!verify_reflection_cycle(cs, links))
    throw std::runtime_error("doubled reflection solution fails verification");
  return cs;
}

std::vector<Perm> euclidean_affine_quotient(const std::vector<int>& type, int n_mod) {
  if (n_mod < 3) throw std::invalid_argument("modulus must be >= 3");

  struct Affine {
    int a, b, c, d, tx, ty; // (x,y) -> (a x + b y + tx, c x + d y + ty)
  };
  std::vector<Affine> maps;
  if (type == std::vector<int>{2, 4, 4}) {
    maps = {{-1, 0, 0, 1, 1, 0},   // (1-x, y)
            {1, 0, 0, -1, 0, 0},   // (x, -y)
            {0, 1, 1, 0, 0, 0}};   // (y, x)
  } else if (type == std::vector<int>{3, 3, 3}) {
    maps = {{-1, 0, -1, 1, 2, 1},  // (2-x, 1-x+y)
            {0, 1, 1, 0, 0, 0},    // (y, x)
            {1, -1, 0, -1, 0, 0}}; // (x-y, -y)
  } else if (type == std::vector<int>{2, 3, 6}) {
    maps = {{0, 1, 1, 0, 0, 0},    // (y, x)
            {0, -1, -1, 0, 1, 1},  // (1-y, 1-x)
            {1, 0, 1, -1, 0, 0}};  // (x, x-y)
  } else {
    throw std::invalid_argument("unsupported affine type (" + tuple_key(type) + ")");
  }

  auto to_perm = [&](const Affine& m) {
    std::vector<int> img(n_mod * n_mod);
    for (int x = 0; x < n_mod; ++x)
      for (int y = 0; y < n_mod; ++y) {
        int nx = ((m.a * x + m.b * y + m.tx) % n_mod + n_mod) % n_mod;
        int ny = ((m.c * x + m.d * y + m.ty) % n_mod + n_mod) % n_mod;
        img[x * n_mod + y] = nx * n_mod + ny;
      }
    return Perm::from_images(std::move(img));
  };

  std::vector<Perm> cs{to_perm(maps[0]), to_perm(maps[1]), to_perm(maps[2])};
  if (!verify_reflection_cycle(cs, type))
    throw SearchError("affine orders collapsed at modulus " + std::to_string(n_mod));
  return cs;
}

// Per-cycle image block used by find_full_quotient: images for the cycle's
// reflections, the cycle's own connector component, and (for 1- and 2-link
// cycles) a compensating component that must land on some other connector so
// the long relation still closes.
namespace {
struct CycleBlock {
  std::vector<Perm> refl; // c_{i,0} .. c_{i,s} (s+1 entries, or 1 when empty)
  Perm e_own;
  Perm e_other;           // identity when no compensation is needed
};

CycleBlock cycle_block(const std::vector<int>& links, const SearchContext& ctx) {
  CycleBlock b;
  if (links.size() == 1) {
    // D_{2n}: c0 = u, c1 = v u v, e = v, compensator v
    auto dih = groups::dihedral_presented(2 * links[0]);
    Perm u = dih.named[0], v = dih.named[1];
    b.refl = {u, v * u * v};
    b.e_own = v;
    b.e_other = v;
  } else if (links.size() == 2) {
    // D_{2 n1 n2}: c0 = u rho^{2 n2}, c1 = u, c2 = u rho^{2 n1},
    // e = rho^{n2 - n1}, compensator rho^{n1 - n2}
    int n1 = links[0], n2 = links[1];
    auto dih = groups::dihedral_presented(2 * n1 * n2);
    Perm u = dih.named[0], rho = dih.named[0] * dih.named[1];
    b.refl = {u * rho.pow(2 * n2), u, u * rho.pow(2 * n1)};
    b.e_own = rho.pow(n2 - n1);
    b.e_other = rho.pow(n1 - n2);
  } else if (links.empty()) {
    Perm c0 = Perm::from_cycles("(1 2)", 2);
    b.refl = {c0};
    b.e_own = b.e_other = Perm::identity(2);
  } else {
    auto cs = find_reflection_cycle_quotient(links, ctx);
    b.refl = cs;
    b.refl.push_back(cs[0]); // c_{i,s} = c_{i,0} under a trivial connector
    b.e_own = b.e_other = Perm::identity(cs[0].degree());
  }
  return b;
}
} // namespace

std::map<CanonicalGenerator, Perm> find_full_quotient(const NecSignature& sig,
                                                      const SearchContext& ctx) {
  if (sig.genus != 0 || sig.sign != Sign::Plus)
    throw std::invalid_argument("full quotient search expects a genus-0 sign-'+' signature");
  if (classify(sig) == Classification::NonHyperbolic)
    throw std::invalid_argument("signature is not admissible");

  if (auto it = ctx.lookup.full.find(render(sig)); it != ctx.lookup.full.end()) {
    std::map<CanonicalGenerator, Perm> images;
    std::size_t deg = 0;
    for (const auto& [name, img] : it->second) deg = std::max(deg, img.size());
    for (const auto& [name, img] : it->second)
      images[CanonicalGenerator::from_name(name)] =
          Perm::from_one_based(img).extended(static_cast<int>(deg));
    for (int i = 1; i <= sig.r(); ++i)
      if (images.at(elliptic(i)).order() != sig.proper_periods[i - 1])
        throw std::runtime_error("full lookup entry has a wrong elliptic order");
    return images;
  }

  bool needs_second_connector = false;
  for (const auto& c : sig.period_cycles)
    if (c.length() == 1 ||
        (c.length() == 2 && c.link_periods[0] != c.link_periods[1]))
      needs_second_connector = true;
  if (needs_second_connector && sig.k() < 2)
    throw std::invalid_argument(
        "short cycles need a second connector to balance against");

  // One factor per cycle plus, when r > 0, a direct product of cyclic groups
  // carrying the elliptic images. The first connector absorbs the elliptic
  // part of the long relation; short cycles push their compensator onto a
  // different cycle's connector.
  std::vector<PermGroup> factors;
  std::vector<CycleBlock> blocks;
  for (int i = 0; i < sig.k(); ++i) {
    blocks.push_back(cycle_block(sig.period_cycles[i].link_periods, ctx.child(1000 + i)));
    std::vector<Perm> gens = blocks.back().refl;
    gens.push_back(blocks.back().e_own);
    factors.emplace_back(gens[0].degree(), gens);
  }
  int elliptic_factor = -1;
  std::vector<Perm> cyclic_gens;
  if (sig.r() > 0) {
    std::vector<PermGroup> cyclics;
    std::vector<Perm> raw;
    for (int m : sig.proper_periods) {
      auto c = groups::cyclic(m);
      cyclics.push_back(c.realized);
      raw.push_back(c.named[0]);
    }
    auto cyc_prod = direct_product(cyclics);
    for (std::size_t i = 0; i < raw.size(); ++i)
      cyclic_gens.push_back(cyc_prod.embed(i, raw[i]));
    elliptic_factor = static_cast<int>(factors.size());
    factors.push_back(cyc_prod.group);
  }
  auto prod = direct_product(factors);
  Perm id = Perm::identity(prod.group.degree());

  std::map<CanonicalGenerator, Perm> images;
  for (int i = 1; i <= sig.k(); ++i) images[connector(i)] = id;
  for (int i = 1; i <= sig.k(); ++i) {
    const auto& b = blocks[i - 1];
    int s = sig.period_cycles[i - 1].length();
    for (int j = 0; j <= s; ++j)
      images[reflection(i, j)] = prod.embed(i - 1, b.refl[j]);
    images[connector(i)] = images[connector(i)] * prod.embed(i - 1, b.e_own);
    if (!b.e_other.is_identity()) {
      int other = i == 1 ? 2 : 1;
      images[connector(other)] = images[connector(other)] * prod.embed(i - 1, b.e_other);
    }
  }
  if (sig.r() > 0) {
    Perm balance = id;
    for (int i = 1; i <= sig.r(); ++i) {
      images[elliptic(i)] = prod.embed(elliptic_factor, cyclic_gens[i - 1]);
      balance = balance * images[elliptic(i)];
    }
    images[connector(1)] = images[connector(1)] * balance.inverse();
  }
  return images;
}

} // namespace nec
