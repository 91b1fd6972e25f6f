// Command-line front end: certificate construction and verification plus the
// individual computations (genus constant, witness search, Selmer orders,
// exceptional-pair scan).
//
// Exit codes: 0 pass, 1 verification failure, 2 exceptional pair,
// 3 search cap exceeded.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "cartancert/certificate.hpp"
#include "cartancert/kg.hpp"
#include "cartancert/obstructions.hpp"
#include "cartancert/selmer.hpp"
#include "cartancert/witness.hpp"

namespace {

using cartancert::u32;
using cartancert::u64;
using nlohmann::json;

int run_construct(u32 g, u64 p, const std::string& out, u64 cap) {
  cartancert::BuildConfig config;
  if (cap != 0) config.sieve_cap = cap;
  json cert;
  try {
    cert = cartancert::construct_certificate(g, p, config);
  } catch (const cartancert::SearchCapExceeded& ex) {
    std::cerr << "search cap exceeded: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "construction failed: " << ex.what() << "\n";
    return 1;
  }
  std::string text = cert.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 1;
    }
    std::cout << "wrote " << out << " (kind: " << cert["kind"] << ")\n";
  }
  return cert["kind"] == "exceptional" ? 2 : 0;
}

int run_verify(const std::string& file) {
  std::ifstream f(file);
  if (!f) {
    std::cerr << "cannot read " << file << "\n";
    return 1;
  }
  json cert;
  try {
    f >> cert;
  } catch (const std::exception& ex) {
    std::cerr << "bad JSON: " << ex.what() << "\n";
    return 1;
  }
  cartancert::VerifyResult res = cartancert::verify_certificate(cert);
  for (const auto& [name, ok] : res.checks)
    std::cout << (ok ? "  ok   " : "  FAIL ") << name << "\n";
  if (res.pass) {
    std::cout << "PASS (" << res.kind << ", " << res.checks.size() << " checks)\n";
    return 0;
  }
  std::cout << "FAIL at: " << res.first_failure << "\n";
  return 1;
}

int run_kg(u32 g) {
  cartancert::KgFactorization kg = cartancert::kg_exact(g);
  std::cout << "K_" << g << " = " << kg.value.get_str() << "\n";
  for (auto [q, e] : kg.factors) std::cout << "  " << q << "^" << e << "\n";
  return 0;
}

int run_witness(u32 g, u64 p) {
  cartancert::KgFactorization kg = cartancert::kg_exact(g);
  cartancert::Witness w = cartancert::find_witness(g, p, kg);
  for (const auto& row : w.scan) {
    std::cout << "d = " << row.d << ", p^d+1 = " << row.modulus.get_str() << ":";
    for (const auto& v : row.prime_powers)
      std::cout << " " << v.q.get_str() << (v.divides_kg ? "(|K)" : "(ok)");
    std::cout << "\n";
  }
  if (w.exceptional) {
    std::cout << "exceptional pair: no prime power q | p^d+1 avoids K_" << g << "\n";
    return 2;
  }
  std::cout << "witness: d = " << w.d << ", q = " << w.q.get_str() << "\n";
  return 0;
}

int run_selmer(u64 m, bool with2) {
  std::cout << "order = " << cartancert::selmer_dim(m, with2) << "\n";
  return 0;
}

int run_scan(u32 gmax, u64 pmax) {
  auto pairs = cartancert::exceptional_scan(gmax, pmax);
  std::cout << "witness-free pairs (g <= " << gmax << ", p <= " << pmax << "):\n";
  for (auto [g, p] : pairs) std::cout << "  (" << g << ", " << p << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction certificates for Cartan-normalizer subgroups of GSp"};
  app.require_subcommand(1);

  u32 g = 2;
  u64 p = 3, m = 8, cap = 0, pmax = 31;
  u32 gmax = 6;
  std::string out, file;
  bool with2 = false;

  auto* construct = app.add_subcommand("construct", "build a certificate for (g, p)");
  construct->add_option("--g", g, "genus")->required();
  construct->add_option("--p", p, "prime")->required();
  construct->add_option("--out", out, "output file (stdout if omitted)");
  construct->add_option("--cap", cap, "prime search cap");

  auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("file", file, "certificate JSON")->required();

  auto* kg = app.add_subcommand("kg", "exact genus constant");
  kg->add_option("--g", g, "genus")->required();

  auto* witness = app.add_subcommand("witness", "witness pair (d, q) for (g, p)");
  witness->add_option("--g", g, "genus")->required();
  witness->add_option("--p", p, "prime")->required();

  auto* selmer = app.add_subcommand("selmer", "surviving Selmer subgroup order");
  selmer->add_option("--m", m, "modulus")->required();
  selmer->add_flag("--with-2-condition", with2, "impose the unramified condition at 2");

  auto* scan = app.add_subcommand("scan", "witness-free pairs in a (g, p) box");
  scan->add_option("--gmax", gmax, "max genus");
  scan->add_option("--pmax", pmax, "max prime");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return run_construct(g, p, out, cap);
    if (verify->parsed()) return run_verify(file);
    if (kg->parsed()) return run_kg(g);
    if (witness->parsed()) return run_witness(g, p);
    if (selmer->parsed()) return run_selmer(m, with2);
    if (scan->parsed()) return run_scan(gmax, pmax);
  } catch (const cartancert::SearchCapExceeded& ex) {
    std::cerr << "search cap exceeded: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
