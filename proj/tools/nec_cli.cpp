// Command-line front end: certify signatures, run batches, re-verify
// certificates, reproduce the solved/open tables, and check ingested groups.
//
// Exit codes: 0 success/certified, 1 usage or internal error,
// 2 non-hyperbolic, 3 Fuchsian, 4 open or criterion not met, 5 search
// exhausted, 6 certificate verification failure.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nec/catalog.hpp"
#include "nec/maps_polytopes.hpp"
#include "nec/report.hpp"

using namespace nec;

namespace {

int status_exit(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Certified: return 0;
    case CertifyStatus::NonHyperbolic: return 2;
    case CertifyStatus::Fuchsian: return 3;
    case CertifyStatus::OpenTable2: return 4;
    case CertifyStatus::SearchFailed: return 5;
  }
  return 1;
}

struct CommonOpts {
  std::uint64_t seed = 20250809;
  int max_degree = 16;
  long long max_attempts = 1000000;
  std::string format = "text";
  std::string data_file;

  SearchContext context() const {
    SearchContext ctx;
    ctx.seed = seed;
    ctx.max_degree = max_degree;
    ctx.max_attempts = max_attempts;
    if (!data_file.empty()) {
      ctx.lookup = QuotientLookup::load(data_file);
    } else {
      std::filesystem::path p = "data/known_quotients.json";
      if (std::filesystem::exists(p)) ctx.lookup = QuotientLookup::load(p.string());
    }
    return ctx;
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--seed", opts.seed, "search seed (deterministic per seed)");
  cmd->add_option("--max-degree", opts.max_degree, "largest permutation degree searched");
  cmd->add_option("--max-attempts", opts.max_attempts, "search attempt budget");
  cmd->add_option("--format", opts.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--data", opts.data_file, "known-quotient lookup file");
}

void print_certificate_text(const Certificate& c) {
  std::cout << "signature        " << c.signature << "\n"
            << "area             " << Rational::parse(c.mu).pretty() << "\n"
            << "recipe           " << c.recipe << "\n"
            << "kernel index     " << c.image_order << "\n"
            << "relators         " << (c.relators_ok ? "pass" : "FAIL") << "\n"
            << "torsion rows     " << (c.torsion.all_pass ? "pass" : "FAIL") << " ("
            << c.torsion.rows.size() << " rows)\n";
  if (c.witness)
    std::cout << "witness          " << *c.witness << " (character "
              << c.witness_character << ")\n";
  std::cout << "kernel           mu " << Rational::parse(c.kernel_mu).pretty() << ", "
            << (c.kernel_orientable ? "orientable" : "non-orientable") << ", genus "
            << c.kernel_genus << (c.kernel_consistent ? "" : " (inconsistent)") << "\n";
  if (c.convention_normalized) std::cout << "note             convention-normalized images\n";
  if (!c.notes.empty()) std::cout << "note             " << c.notes << "\n";
}

int cmd_certify(const std::string& text, const CommonOpts& opts, const std::string& out_path,
                bool both_conventions, bool orientable) {
  NecSignature sig;
  try {
    sig = parse_signature(text);
  } catch (const SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto ctx = opts.context();
  auto outcome = certify_signature(sig, ctx);
  if (outcome.status == CertifyStatus::Certified && orientable) {
    Homomorphism h = outcome.cert->homomorphism();
    outcome.cert = orientable_surface_kernel(h);
  }
  if (opts.format == "json") {
    nlohmann::json j;
    j["status"] = to_string(outcome.status);
    if (!outcome.detail.empty()) j["detail"] = outcome.detail;
    if (outcome.cert) j["certificate"] = nlohmann::json::parse(outcome.cert->to_json());
    if (both_conventions && sig.k() > 0) {
      j["bordered_criterion"] = {
          {"cyclic", bordered_surface_criterion(sig, AdjacencyReading::Cyclic)},
          {"linear", bordered_surface_criterion(sig, AdjacencyReading::Linear)}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "status           " << to_string(outcome.status) << "\n";
    if (!outcome.detail.empty()) std::cout << "detail           " << outcome.detail << "\n";
    if (outcome.cert) print_certificate_text(*outcome.cert);
    if (both_conventions && sig.k() > 0) {
      bool cyc = bordered_surface_criterion(sig, AdjacencyReading::Cyclic);
      bool lin = bordered_surface_criterion(sig, AdjacencyReading::Linear);
      std::cout << "bordered         cyclic=" << (cyc ? "yes" : "no")
                << " linear=" << (lin ? "yes" : "no")
                << (cyc != lin ? "  (readings disagree)" : "") << "\n";
    }
  }
  if (outcome.cert && !out_path.empty()) {
    std::ofstream out(out_path);
    out << outcome.cert->to_json() << "\n";
  }
  return status_exit(outcome.status);
}

int cmd_batch(const std::string& path, const CommonOpts& opts, int threads) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  auto report = run_batch(lines, opts.context(), threads);
  if (opts.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
      nlohmann::json row;
      row["signature"] = r.signature;
      row["status"] = to_string(r.status);
      if (!r.recipe.empty()) row["recipe"] = r.recipe;
      if (r.index) row["index"] = r.index;
      if (r.index) row["genus"] = r.genus;
      row["ms"] = r.millis;
      if (!r.detail.empty()) row["detail"] = r.detail;
      rows.push_back(row);
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    for (const auto& r : report.rows) {
      std::cout << r.signature << "  " << to_string(r.status);
      if (!r.recipe.empty())
        std::cout << "  recipe=" << r.recipe << " index=" << r.index
                  << " genus=" << r.genus;
      std::cout << "  (" << r.millis << " ms)\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Certificate cert;
  try {
    cert = Certificate::from_json(text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  }
  auto res = verify_certificate(cert);
  if (res.ok) {
    std::cout << "certificate verifies: " << cert.signature << " via " << cert.recipe
              << ", kernel index " << cert.image_order << "\n";
    return 0;
  }
  std::cout << "certificate REJECTED: " << res.failure << "\n";
  return 6;
}

int cmd_tables(const CommonOpts& opts) {
  auto ctx = opts.context();
  auto solved = solved_table_rows(ctx);
  auto open = open_table_rows();
  if (opts.format == "json") {
    nlohmann::json j;
    auto dump_rows = [&](const std::vector<TableRow>& rows) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json row;
        row["label"] = r.label;
        if (r.open) {
          row["status"] = "open";
        } else {
          row["instance"] = r.instance;
          row["status"] = to_string(r.outcome.status);
          if (r.outcome.cert) {
            row["recipe"] = r.outcome.cert->recipe;
            row["index"] = r.outcome.cert->image_order;
          }
        }
        arr.push_back(row);
      }
      return arr;
    };
    j["solved"] = dump_rows(solved);
    j["open"] = dump_rows(open);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "solved one-cycle rows:\n";
    int certified = 0;
    for (const auto& r : solved) {
      bool ok = r.outcome.status == CertifyStatus::Certified;
      certified += ok;
      std::cout << "  " << (ok ? "[certified]" : "[FAILED]   ") << " " << r.instance << "  "
                << r.label;
      if (r.outcome.cert)
        std::cout << "  recipe=" << r.outcome.cert->recipe
                  << " index=" << r.outcome.cert->image_order;
      std::cout << "\n";
    }
    std::cout << "open one-cycle rows:\n";
    for (const auto& r : open) std::cout << "  [open]      " << r.label << "\n";
    std::cout << certified << "/" << solved.size() << " rows certified, " << open.size()
              << " rows open\n";
  }
  for (const auto& r : solved)
    if (r.outcome.status != CertifyStatus::Certified) return 5;
  return 0;
}

int cmd_check_group(const std::string& path, const std::string& mode, const CommonOpts& opts) {
  GroupFile gf;
  try {
    gf = ingest_group(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  bool json_out = opts.format == "json";
  nlohmann::json j;

  if (mode == "prop51" || mode == "cor52") {
    if (mode == "prop51") {
      if (!gf.involutions) {
        std::cerr << "error: prop51 needs an involution system (roles C0..)\n";
        return 1;
      }
      auto res = odd_identity_check(*gf.involutions);
      j["holds"] = res.holds;
      if (res.witness) {
        std::string w;
        for (int idx : *res.witness) w += (w.empty() ? "C" : ".C") + std::to_string(idx);
        j["witness"] = w;
        j["witness_length"] = res.witness->size();
      }
      if (json_out) std::cout << j.dump(2) << "\n";
      else {
        std::cout << "odd identity word " << (res.holds ? "exists" : "does not exist")
                  << " (even-word subgroup index " << (res.holds ? 1 : 2) << ")\n";
        if (res.witness) std::cout << "witness: " << j["witness"].get<std::string>() << "\n";
      }
      return res.holds ? 0 : 4;
    }
    RotationSystem rot = gf.rotations ? *gf.rotations : rotations_of(*gf.involutions);
    auto res = corollary_check(rot);
    j["decided"] = res.decided;
    j["holds"] = res.holds;
    j["holds_with_identity_prefixes"] = res.holds_with_identity;
    if (res.z) j["z"] = res.z->one_based();
    if (json_out) std::cout << j.dump(2) << "\n";
    else {
      if (!res.decided) std::cout << "undecided at bound\n";
      else
        std::cout << "involution chain " << (res.holds ? "exists" : "does not exist")
                  << " (with identity prefixes allowed: "
                  << (res.holds_with_identity ? "yes" : "no") << ")\n";
    }
    return res.decided ? (res.holds ? 0 : 4) : 5;
  }

  if (!gf.involutions) {
    std::cerr << "error: this mode needs an involution system\n";
    return 1;
  }
  if (mode == "hemi") {
    auto rep = hemi_construction(*gf.involutions);
    j["applicable"] = rep.applicable;
    j["subgroup_order"] = rep.subgroup_order;
    j["quotient_order"] = rep.quotient_order;
    j["normal"] = rep.normal;
    j["witness_found"] = rep.witness_found;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    if (rep.cert) j["certificate"] = nlohmann::json::parse(rep.cert->to_json());
    if (json_out) std::cout << j.dump(2) << "\n";
    else {
      std::cout << "|N| = " << rep.subgroup_order << ", |G/N| = " << rep.quotient_order
                << (rep.normal ? " (normal)" : " (NOT normal)") << "\n";
      if (!rep.applicable || !rep.witness_found)
        std::cout << "not certified: " << rep.detail << "\n";
      else
        std::cout << "certified " << rep.signature << " with kernel index "
                  << rep.cert->image_order << "\n";
    }
    return rep.cert ? 0 : 4;
  }
  if (mode == "perfect") {
    auto rep = perfect_route_check(*gf.involutions);
    j["perfect"] = rep.perfect;
    j["word_found"] = rep.word_found;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    if (rep.cert) j["certificate"] = nlohmann::json::parse(rep.cert->to_json());
    if (json_out) std::cout << j.dump(2) << "\n";
    else {
      std::cout << "perfect: " << (rep.perfect ? "yes" : "no") << "\n";
      if (rep.cert)
        std::cout << "certified " << rep.signature << " with kernel index "
                  << rep.cert->image_order << "\n";
      else
        std::cout << "not certified: " << rep.detail << "\n";
    }
    return rep.cert ? 0 : 4;
  }
  std::cerr << "error: unknown mode " << mode << "\n";
  return 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsion-free finite-index kernel certificates for NEC groups"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string signature_text, file_path, out_path, mode = "prop51";
  bool both_conventions = false, orientable = false;
  int threads = 0;

  auto* certify = app.add_subcommand("certify", "construct and verify one certificate");
  certify->add_option("signature", signature_text, "e.g. (0;+;[2,3];{(-),(2,2,2)})")
      ->required();
  add_common(certify, opts);
  certify->add_option("-o,--out", out_path, "write the certificate JSON here");
  certify->add_flag("--both-conventions", both_conventions,
                    "report the bordered-surface criterion under both adjacency readings");
  certify->add_flag("--orientable", orientable,
                    "emit the orientation-preserving kernel certificate instead");

  auto* batch = app.add_subcommand("batch", "certify every signature in a file");
  batch->add_option("file", file_path, "one signature per line, '#' comments")->required();
  add_common(batch, opts);
  batch->add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("file", file_path, "certificate JSON")->required();

  auto* tables = app.add_subcommand("tables", "reproduce the solved/open one-cycle tables");
  add_common(tables, opts);

  auto* check = app.add_subcommand("check-group", "run the map/polytope checkers on a group file");
  check->add_option("file", file_path, "group JSON file")->required();
  check->add_option("--mode", mode, "prop51|cor52|hemi|perfect")
      ->check(CLI::IsMember({"prop51", "cor52", "hemi", "perfect"}));
  add_common(check, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (certify->parsed())
      return cmd_certify(signature_text, opts, out_path, both_conventions, orientable);
    if (batch->parsed()) return cmd_batch(file_path, opts, threads);
    if (verify->parsed()) return cmd_verify(file_path);
    if (tables->parsed()) return cmd_tables(opts);
    if (check->parsed()) return cmd_check_group(file_path, mode, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
