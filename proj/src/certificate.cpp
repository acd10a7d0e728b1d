#include "nec/certificate.hpp"

#include <json.hpp>

namespace nec {

using nlohmann::json;

std::string Certificate::to_json(int indent) const {
  json j;
  j["schema"] = schema;
  j["signature"] = signature;
  j["mu"] = mu;
  j["recipe"] = recipe;
  j["convention_normalized"] = convention_normalized;
  j["degree"] = degree;
  json imgs = json::object();
  for (const auto& [name, img] : images) imgs[name] = img;
  j["images"] = imgs;
  j["image_order"] = image_order;
  j["relators_ok"] = relators_ok;
  json rows = json::array();
  for (const auto& row : torsion.rows)
    rows.push_back({{"source", row.source},
                    {"required", row.required},
                    {"achieved", row.achieved},
                    {"pass", row.pass}});
  j["torsion"] = {{"rows", rows}, {"all_pass", torsion.all_pass}};
  if (witness) {
    j["witness"] = *witness;
    j["witness_character"] = witness_character;
    j["witness_is_identity"] = witness_is_identity;
  } else {
    j["witness"] = nullptr;
  }
  j["kernel"] = {{"mu", kernel_mu},
                 {"orientable", kernel_orientable},
                 {"genus", kernel_genus},
                 {"consistent", kernel_consistent}};
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(indent);
}

Certificate Certificate::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  }
  Certificate c;
  try {
    c.schema = j.at("schema").get<std::string>();
    if (c.schema != "fenchel-cert/1")
      throw std::runtime_error("unsupported schema: " + c.schema);
    c.signature = j.at("signature").get<std::string>();
    c.mu = j.at("mu").get<std::string>();
    c.recipe = j.at("recipe").get<std::string>();
    c.convention_normalized = j.value("convention_normalized", false);
    c.degree = j.at("degree").get<int>();
    for (auto it = j.at("images").begin(); it != j.at("images").end(); ++it)
      c.images[it.key()] = it.value().get<std::vector<int>>();
    c.image_order = j.at("image_order").get<long long>();
    c.relators_ok = j.at("relators_ok").get<bool>();
    for (const auto& row : j.at("torsion").at("rows")) {
      TorsionRow r;
      r.source = row.at("source").get<std::string>();
      r.required = row.at("required").get<long long>();
      r.achieved = row.at("achieved").get<long long>();
      r.pass = row.at("pass").get<bool>();
      c.torsion.rows.push_back(r);
    }
    c.torsion.all_pass = j.at("torsion").at("all_pass").get<bool>();
    if (!j.at("witness").is_null()) {
      c.witness = j.at("witness").get<std::string>();
      c.witness_character = j.at("witness_character").get<int>();
      c.witness_is_identity = j.at("witness_is_identity").get<bool>();
    }
    c.kernel_mu = j.at("kernel").at("mu").get<std::string>();
    c.kernel_orientable = j.at("kernel").at("orientable").get<bool>();
    c.kernel_genus = j.at("kernel").at("genus").get<long long>();
    c.kernel_consistent = j.at("kernel").at("consistent").get<bool>();
    c.notes = j.value("notes", "");
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

Homomorphism Certificate::homomorphism() const {
  Homomorphism h;
  h.sig = parse_signature(signature);
  h.degree = degree;
  for (const auto& [name, img] : images)
    h.images[CanonicalGenerator::from_name(name)] = Perm::from_one_based(img);
  validate_images(h);
  return h;
}

Certificate make_certificate(const Homomorphism& h, const std::string& recipe,
                             const std::optional<Word>& witness,
                             bool convention_normalized, const std::string& notes) {
  Certificate c;
  c.signature = render(h.sig);
  c.mu = area_mu(h.sig).str();
  c.recipe = recipe;
  c.convention_normalized = convention_normalized;
  c.degree = h.degree;
  for (const auto& [g, p] : h.images) c.images[g.name()] = p.one_based();
  c.image_order = h.image_order();
  c.relators_ok = verify_relators(h).all_pass;
  c.torsion = torsion_free_certificate(h);
  if (witness) {
    c.witness = witness->str();
    c.witness_character = orientation_character(h.sig, *witness);
    c.witness_is_identity = evaluate_word(h, *witness).is_identity();
    c.kernel_orientable = false;
  } else {
    c.kernel_orientable = true;
  }
  Rational mu_k = riemann_hurwitz(area_mu(h.sig), c.image_order);
  c.kernel_mu = mu_k.str();
  auto ks = kernel_surface_data(area_mu(h.sig), c.image_order, c.kernel_orientable);
  c.kernel_genus = ks.genus;
  c.kernel_consistent = ks.consistent;
  c.notes = notes;
  return c;
}

VerifyResult verify_certificate(const Certificate& cert) {
  auto fail = [](std::string what) { return VerifyResult{false, std::move(what)}; };
  Homomorphism h;
  try {
    h = cert.homomorphism();
  } catch (const std::exception& e) {
    return fail(std::string("images: ") + e.what());
  }
  if (area_mu(h.sig).str() != cert.mu) return fail("mu mismatch");
  if (h.image_order() != cert.image_order) return fail("image order mismatch");
  auto rel = verify_relators(h);
  if (rel.all_pass != cert.relators_ok || !rel.all_pass) return fail("relator check");
  auto tors = torsion_free_certificate(h);
  if (!tors.all_pass || !cert.torsion.all_pass) return fail("torsion report");
  if (tors.rows.size() != cert.torsion.rows.size()) return fail("torsion rows mismatch");
  for (std::size_t i = 0; i < tors.rows.size(); ++i) {
    const auto& a = tors.rows[i];
    const auto& b = cert.torsion.rows[i];
    if (a.source != b.source || a.required != b.required || a.achieved != b.achieved ||
        a.pass != b.pass)
      return fail("torsion row " + a.source);
  }
  if (cert.witness) {
    Word w;
    try {
      w = Word::parse(*cert.witness);
    } catch (const std::exception& e) {
      return fail(std::string("witness: ") + e.what());
    }
    if (cert.kernel_orientable) return fail("witness on an orientable kernel");
    int chr;
    try {
      chr = orientation_character(h.sig, w);
    } catch (const std::exception& e) {
      return fail(std::string("witness: ") + e.what());
    }
    if (chr != -1 || cert.witness_character != -1) return fail("witness character");
    if (!evaluate_word(h, w).is_identity() || !cert.witness_is_identity)
      return fail("witness image");
  } else {
    if (!cert.kernel_orientable) return fail("missing witness");
  }
  Rational mu_k = riemann_hurwitz(area_mu(h.sig), cert.image_order);
  if (mu_k.str() != cert.kernel_mu) return fail("kernel mu");
  auto ks = kernel_surface_data(area_mu(h.sig), cert.image_order, cert.kernel_orientable);
  if (ks.consistent != cert.kernel_consistent) return fail("kernel genus integrality");
  if (ks.genus != cert.kernel_genus) return fail("kernel genus");
  return {};
}

} // namespace nec
