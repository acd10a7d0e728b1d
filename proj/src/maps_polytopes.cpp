#include "nec/maps_polytopes.hpp"

#include <deque>
#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "nec/catalog.hpp"

namespace nec {

using nlohmann::json;

GroupFile ingest_group_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("group file parse error: ") + e.what());
  }
  int degree;
  std::vector<Perm> gens;
  std::vector<std::string> roles;
  std::vector<int> links;
  try {
    degree = j.at("degree").get<int>();
    for (const auto& img : j.at("generators"))
      gens.push_back(Perm::from_one_based(img.get<std::vector<int>>()));
    roles = j.at("roles").get<std::vector<std::string>>();
    links = j.at("declared_links").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("group file parse error: ") + e.what());
  }
  if (gens.empty()) throw std::runtime_error("group file has no generators");
  if (roles.size() != gens.size())
    throw std::runtime_error("roles and generators differ in length");
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::runtime_error("generator degree mismatch");

  GroupFile out;
  if (roles[0].starts_with("C")) {
    if (links.size() != gens.size())
      throw std::runtime_error("an involution system needs one link per generator");
    InvolutionSystem sys{PermGroup(degree, gens), gens, links};
    int s = sys.s();
    for (int i = 0; i < s; ++i)
      if (gens[i].order() != 2)
        throw std::runtime_error("generator " + roles[i] + " is not an involution");
    for (int i = 1; i <= s; ++i) {
      long long got = (gens[i - 1] * gens[i % s]).order();
      if (got != links[i - 1])
        throw std::runtime_error("declared order mismatch at link " + std::to_string(i) +
                                 ": declared " + std::to_string(links[i - 1]) + ", got " +
                                 std::to_string(got));
    }
    out.involutions = std::move(sys);
  } else {
    if (links.size() != gens.size())
      throw std::runtime_error("a rotation system needs one declared order per generator");
    RotationSystem sys{PermGroup(degree, gens), gens, links, std::nullopt};
    Perm prod = Perm::identity(degree);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].order() != links[i])
        throw std::runtime_error("declared order mismatch at " + roles[i]);
      prod = prod * gens[i];
    }
    if (!prod.is_identity())
      throw std::runtime_error("rotation generators do not multiply to the identity");
    out.rotations = std::move(sys);
  }
  return out;
}

GroupFile ingest_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ingest_group_json(text);
}

RotationSystem rotations_of(const InvolutionSystem& sys) {
  RotationSystem rot;
  int s = sys.s();
  for (int i = 1; i <= s; ++i) {
    rot.gens.push_back(sys.gens[i - 1] * sys.gens[i % s]);
    rot.orders.push_back(sys.links[i - 1]);
  }
  rot.group = PermGroup(sys.group.degree(), rot.gens);
  rot.z = sys.gens[0];
  return rot;
}

namespace {

// breadth-first search over (element, parity) with word reconstruction
struct ParityBfs {
  // moves: (permutation, parity increment); finds the shortest word reaching
  // (identity, 1) and returns its move labels
  static std::optional<std::vector<int>> find_odd_identity(
      const Perm& id, const std::vector<std::pair<Perm, int>>& moves, long long bound) {
    struct Key {
      std::size_t operator()(const std::pair<Perm, int>& k) const {
        return PermHash{}(k.first) * 31 + static_cast<std::size_t>(k.second);
      }
    };
    std::unordered_map<std::pair<Perm, int>, long long, Key> index_of;
    std::vector<std::pair<Perm, int>> states;
    std::vector<long long> from;
    std::vector<int> label;
    auto push = [&](std::pair<Perm, int> st, long long f, int l) -> bool {
      if (index_of.count(st)) return false;
      index_of[st] = static_cast<long long>(states.size());
      states.push_back(std::move(st));
      from.push_back(f);
      label.push_back(l);
      return true;
    };
    push({id, 0}, -1, -1);
    for (std::size_t head = 0; head < states.size(); ++head) {
      if (static_cast<long long>(states.size()) > 2 * bound + 2) return std::nullopt;
      auto st = states[head];
      for (std::size_t m = 0; m < moves.size(); ++m) {
        std::pair<Perm, int> next{st.first * moves[m].first,
                                  (st.second + moves[m].second) % 2};
        if (next.first.is_identity() && next.second == 1) {
          std::vector<int> word{static_cast<int>(m)};
          for (long long at = static_cast<long long>(head); from[at] >= 0; at = from[at])
            word.push_back(label[at]);
          std::reverse(word.begin(), word.end());
          return word;
        }
        push(next, static_cast<long long>(head), static_cast<int>(m));
      }
    }
    return std::nullopt;
  }
};

} // namespace

OddWordResult odd_identity_check(const InvolutionSystem& sys, long long witness_bound) {
  OddWordResult out;
  std::vector<Perm> even_gens;
  for (int i = 1; i < sys.s(); ++i) even_gens.push_back(sys.gens[0] * sys.gens[i]);
  PermGroup even(sys.group.degree(), even_gens);
  out.holds = even.order() == sys.group.order();
  if (out.holds && sys.group.order() <= witness_bound) {
    std::vector<std::pair<Perm, int>> moves;
    for (const auto& c : sys.gens) moves.push_back({c, 1});
    out.witness = ParityBfs::find_odd_identity(Perm::identity(sys.group.degree()), moves,
                                               sys.group.order());
  }
  return out;
}

CorollaryResult corollary_check(const RotationSystem& sys, long long bound) {
  CorollaryResult out;
  if (sys.group.order() > bound) {
    out.decided = false;
    return out;
  }
  int s = static_cast<int>(sys.gens.size());
  std::vector<Perm> prefixes; // X_1...X_i for i = 0..s-1
  Perm acc = Perm::identity(sys.group.degree());
  for (int i = 0; i < s; ++i) {
    prefixes.push_back(acc);
    acc = acc * sys.gens[i];
  }
  for (const auto& z : sys.group.elements(static_cast<std::size_t>(bound) + 1)) {
    bool exact = true, relaxed = true;
    for (const auto& pre : prefixes) {
      long long ord = (z * pre).order();
      if (ord != 2) exact = false;
      if (ord > 2) relaxed = false;
      if (!exact && !relaxed) break;
    }
    if (exact && !out.holds) {
      out.holds = true;
      out.z = z;
    }
    if (relaxed) out.holds_with_identity = true;
    if (out.holds && out.holds_with_identity) break;
  }
  return out;
}

HemiReport hemi_construction(const InvolutionSystem& sys, long long bound) {
  HemiReport rep;
  if (sys.s() != 3) {
    rep.detail = "needs exactly three involutions";
    return rep;
  }
  if (sys.links[0] != 2 || sys.links[2] % 2 != 0) {
    rep.detail = "needs link orders (2, s, 2n)";
    return rep;
  }
  int m = sys.links[1];
  int n = sys.links[2] / 2;
  const Perm& c0 = sys.gens[0];
  Perm rot = sys.gens[1] * sys.gens[2];
  if (rot.order() != m) {
    rep.detail = "middle rotation order does not match its declared link";
    return rep;
  }
  std::vector<Perm> conj_gens;
  for (int j = 0; j < m; ++j) conj_gens.push_back(rot.pow(-j) * c0 * rot.pow(j));
  PermGroup n_sub(sys.group.degree(), conj_gens);
  rep.subgroup_order = n_sub.order();
  rep.normal = normal_closure(sys.group, conj_gens).order() == rep.subgroup_order;
  rep.quotient_order = sys.group.order() / rep.subgroup_order;
  if (rep.quotient_order != 2LL * m) {
    rep.detail = "quotient order " + std::to_string(rep.quotient_order) + " differs from " +
                 std::to_string(2 * m);
    return rep;
  }
  if (n < 2 || m < 3) {
    rep.detail = "degenerate derived cycle";
    return rep;
  }
  rep.applicable = true;

  NecSignature delta;
  delta.genus = 0;
  delta.sign = Sign::Plus;
  delta.period_cycles.push_back(PeriodCycle{std::vector<int>(m, n)});
  rep.signature = render(delta);

  Homomorphism h;
  h.sig = delta;
  h.degree = sys.group.degree();
  Perm id = Perm::identity(h.degree);
  for (int j = 0; j < m; ++j) h.images[reflection(1, j)] = conj_gens[j];
  h.images[reflection(1, m)] = conj_gens[0];
  h.images[connector(1)] = id;

  InvolutionSystem derived{n_sub, conj_gens, std::vector<int>(m, n)};
  auto odd = odd_identity_check(derived, bound);
  rep.witness_found = odd.holds && odd.witness.has_value();
  if (!rep.witness_found) {
    rep.detail = odd.holds ? "odd word exists but exceeds the search bound"
                           : "no odd identity word: the derived kernel preserves orientation";
    return rep;
  }
  Word witness;
  for (int idx : *odd.witness) witness.append(reflection(1, idx));
  rep.cert = make_certificate(h, "5.2/hemi", witness);
  return rep;
}

PerfectRouteReport perfect_route_check(const InvolutionSystem& sys, long long bound) {
  PerfectRouteReport rep;
  if (sys.s() != 3 || sys.links[0] != 2 || sys.links[2] % 2 != 0) {
    rep.detail = "needs link orders (2, m, 2n)";
    return rep;
  }
  rep.perfect = is_perfect(sys.group);
  if (!rep.perfect) {
    rep.detail = "group is not perfect";
    return rep;
  }
  if (sys.group.order() > bound) {
    rep.detail = "group exceeds the search bound";
    return rep;
  }
  int m = sys.links[1];
  int n = sys.links[2] / 2;
  Perm x = sys.gens[1] * sys.gens[2];
  const Perm& c = sys.gens[0];
  std::vector<std::pair<Perm, int>> moves{{x, 0}, {x.inverse(), 0}, {c, 1}};
  auto word = ParityBfs::find_odd_identity(Perm::identity(sys.group.degree()), moves,
                                           2 * sys.group.order());
  rep.word_found = word.has_value();
  if (!rep.word_found) {
    rep.detail = "no odd-count identity word within the bound";
    return rep;
  }
  rep.word = *word;

  NecSignature lambda;
  lambda.genus = 0;
  lambda.sign = Sign::Plus;
  lambda.proper_periods.push_back(m);
  lambda.period_cycles.push_back(PeriodCycle{{n}});
  rep.signature = render(lambda);

  Homomorphism h;
  h.sig = lambda;
  h.degree = sys.group.degree();
  h.images[elliptic(1)] = x;
  h.images[connector(1)] = x.inverse();
  h.images[reflection(1, 0)] = c;
  h.images[reflection(1, 1)] = x.inverse() * c * x;

  Word witness;
  for (int code : rep.word) {
    if (code == 0) witness.append(elliptic(1));
    else if (code == 1) witness.append(elliptic(1), -1);
    else witness.append(reflection(1, 0));
  }
  rep.cert = make_certificate(h, "5.4/perfect", witness);
  return rep;
}

} // namespace nec
