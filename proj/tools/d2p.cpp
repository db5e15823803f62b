#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "d2p/json_io.hpp"
#include "d2p/rng.hpp"

namespace {

using namespace d2p;

// Exit codes: 0 pass, 1 check failure, 2 usage or config error, 3 resource
// cap exceeded.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// Flags shared by the rep-based subcommands; values only apply when the
// flag was actually passed, so they can override a --config file.
struct RepFlags {
  std::string config_path;
  std::uint32_t p = 3;
  std::uint32_t r = 1;
  std::uint32_t s = 0;
  std::vector<std::uint32_t> weights;
  std::uint32_t sampled_orders = 12;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> hsop;
  std::size_t max_basis = 20000;
  bool json = false;
  std::string out;

  CLI::Option* opt_p = nullptr;
  CLI::Option* opt_r = nullptr;
  CLI::Option* opt_s = nullptr;
  CLI::Option* opt_weights = nullptr;
  CLI::Option* opt_orders = nullptr;
  CLI::Option* opt_seed = nullptr;
  CLI::Option* opt_hsop = nullptr;
  CLI::Option* opt_max_basis = nullptr;

  void attach(CLI::App* cmd, bool with_hsop) {
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    opt_p = cmd->add_option("-p,--prime", p, "odd prime p (group order 2p)");
    opt_r = cmd->add_option("-r,--pairs", r, "number of x/y variable pairs");
    opt_s = cmd->add_option("-s,--swaps", s, "number of z/w variable pairs");
    opt_weights = cmd->add_option("--weights", weights, "rotation weights a_1..a_r")
                      ->delimiter(',');
    opt_orders = cmd->add_option("--orders", sampled_orders, "number of sampled orders");
    opt_seed = cmd->add_option("--seed", seed, "seed for sampled orders");
    if (with_hsop) {
      opt_hsop = cmd->add_option("--hsop", hsop, "hsop degrees to bound against")
                     ->delimiter(',');
    }
    opt_max_basis = cmd->add_option("--max-basis", max_basis, "Buchberger element cap");
    cmd->add_flag("--json", json, "emit JSON instead of text");
    cmd->add_option("--out", out, "output path ('-' = stdout)");
  }

  RunConfig to_config() const {
    RunConfig cfg;
    if (!config_path.empty()) cfg = config_from_json(load_json_file(config_path));
    if (opt_p->count() > 0) cfg.p = p;
    if (opt_r->count() > 0) cfg.r = r;
    if (opt_s->count() > 0) cfg.s = s;
    if (opt_weights->count() > 0) cfg.weights = weights;
    if (opt_orders->count() > 0) cfg.sampled_orders = sampled_orders;
    if (opt_seed->count() > 0) cfg.seed = seed;
    if (opt_hsop != nullptr && opt_hsop->count() > 0) cfg.hsop_degrees = hsop;
    if (opt_max_basis->count() > 0) cfg.max_basis = max_basis;
    return cfg;
  }
};

std::string join_u32(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::uint32_t x : v) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out;
}

int run_field(const RepFlags& flags) {
  RunConfig cfg = flags.to_config();
  const BinaryFieldDescriptor field = build_field(cfg.p);
  if (flags.json) {
    write_output(flags.out, dump_pretty(field_to_json(field)));
  } else {
    std::ostringstream os;
    os << "GF(2^" << field.k << ") for p=" << field.p << ": modulus_poly=" << field.modulus_poly
       << " zeta=" << field.zeta << " (zeta has multiplicative order " << field.p << ")\n";
    write_output(flags.out, os.str());
  }
  return kExitPass;
}

int run_basis(const RepFlags& flags) {
  RunConfig cfg = flags.to_config();
  const DihedralRep rep = rep_from_config(cfg);
  const VarLayout& layout = rep.layout();

  const std::vector<Poly2> hilbert = hilbert_ideal_generators(rep);
  const GeneratorSet gens = universal_basis(rep);
  const GeneratorSet pruned = prune_redundant(gens);

  if (flags.json) {
    Json hilbert_json = Json::array();
    for (const Poly2& g : hilbert) hilbert_json.push_back(render_poly(layout, g));
    Json j{{"rep", rep_to_json(rep)},
           {"hilbert_generators", std::move(hilbert_json)},
           {"universal_basis", generator_set_to_json(layout, gens)},
           {"pruned", generator_set_to_json(layout, pruned)}};
    write_output(flags.out, dump_pretty(j));
    return kExitPass;
  }

  std::ostringstream os;
  os << "rep: p=" << rep.p() << " r=" << rep.r() << " s=" << rep.s() << " weights=["
     << join_u32(rep.weights()) << "]\n";
  os << "hilbert ideal generators (" << hilbert.size() << "):\n";
  for (const Poly2& g : hilbert) os << "  " << render_poly(layout, g) << "\n";
  os << "universal basis (" << gens.elements.size() << "):\n";
  for (const TaggedPoly& e : gens.elements) {
    os << "  [" << family_name(e.family) << "] " << render_poly(layout, e.poly) << "\n";
  }
  os << "pruned (" << pruned.elements.size() << "):\n";
  for (const TaggedPoly& e : pruned.elements) {
    os << "  [" << family_name(e.family) << "] " << render_poly(layout, e.poly) << "\n";
  }
  write_output(flags.out, os.str());
  return kExitPass;
}

int run_verify(const RepFlags& flags) {
  RunConfig cfg = flags.to_config();
  const Report report = d2p::run_verify(cfg);

  if (flags.json) {
    write_output(flags.out, dump_pretty(report_to_json(report)));
  } else {
    std::ostringstream os;
    os << "rep: p=" << cfg.p << " r=" << cfg.r << " s=" << cfg.s << " weights=["
       << join_u32(cfg.weights) << "]  field: GF(2^" << report.field.k << ")\n";
    os << "universal basis: " << report.counts.total << " elements (orbit_sum="
       << report.counts.orbit_sum << " monomial_multiple=" << report.counts.monomial_multiple
       << " norm_pair=" << report.counts.norm_pair << "), hilbert generators: "
       << report.counts.hilbert_generators << "\n";
    for (const OrderRecord& rec : report.per_order) {
      os << "  order " << rec.order.label << ": gb_size=" << rec.gb_size << " dim="
         << rec.dimension << " top=" << rec.top_degree
         << (rec.checks.all() ? "  [ok]" : "  [FAIL]") << "\n";
      if (!rec.checks.all()) {
        os << "    buchberger_ok=" << rec.checks.buchberger_ok << " ideal_equal="
           << rec.checks.ideal_equal << " steinberg_ok=" << rec.checks.steinberg_ok
           << " top_degree_ok=" << rec.checks.top_degree_ok << " degree_bound_ok="
           << rec.checks.degree_bound_ok << "\n";
      }
    }
    os << "coinvariants (grevlex): dimension=" << report.dimension << " top_degree="
       << report.top_degree << "\n";
    const FormulaReport& f = report.formulas;
    os << "formulas: top_degree " << f.top_degree_computed << " vs " << f.top_degree_formula
       << (f.top_degree_match ? " (match)" : " (MISMATCH)") << ", witnesses "
       << (f.witness_small_nonzero && (!f.witness_power_applicable || f.witness_power_nonzero)
               ? "ok"
               : "FAIL");
    if (f.steinberg_applicable) {
      os << ", dimension " << f.dimension << " >= " << f.steinberg_bound << " "
         << (f.steinberg_ok ? "ok" : "FAIL");
    }
    if (f.hsop) {
      os << ", hsop bounds (top<=" << f.hsop->top_degree_bound << " dim<="
         << f.hsop->dimension_bound << ") "
         << (f.hsop->top_within && f.hsop->dim_within ? "ok" : "FAIL");
    }
    os << "\n" << (report.pass ? "PASS" : "FAIL") << "\n";
    write_output(flags.out, os.str());
  }
  return report.pass ? kExitPass : kExitCheckFailure;
}

int run_coinv(const RepFlags& flags, const std::string& order_name) {
  RunConfig cfg = flags.to_config();
  const DihedralRep rep = rep_from_config(cfg);
  const VarLayout& layout = rep.layout();

  MonomialOrder order = grevlex_order();
  if (order_name == "lex") {
    order = lex_order();
  } else if (order_name == "grlex") {
    order = grlex_order();
  } else if (order_name == "grevlex") {
    order = grevlex_order();
  } else if (order_name == "lex-swapped") {
    order = swapped_lex_order(layout);
  } else {
    throw std::invalid_argument("unknown order '" + order_name + "'");
  }

  const CoinvariantStats stats = coinvariant_stats(rep, order);
  const std::uint32_t formula = top_degree_formula(rep);

  std::optional<HsopBounds> bounds;
  if (!cfg.hsop_degrees.empty()) bounds = hsop_bounds(cfg.hsop_degrees);
  const bool hsop_ok = !bounds || (stats.top_degree <= bounds->top_degree_bound &&
                                   stats.dimension <= bounds->dimension_bound);

  if (flags.json) {
    Json lt = Json::array();
    for (const Monomial& m : stats.lt_generators) lt.push_back(render_monomial(layout, m));
    Json sm = Json::array();
    for (const Monomial& m : stats.standard_monomials) sm.push_back(render_monomial(layout, m));
    Json j{{"rep", rep_to_json(rep)},
           {"order", order_to_json(order)},
           {"dimension", stats.dimension},
           {"top_degree", stats.top_degree},
           {"top_degree_formula", formula},
           {"lt_generators", std::move(lt)},
           {"standard_monomials", std::move(sm)}};
    if (bounds) {
      j["hsop"] = Json{{"degrees", cfg.hsop_degrees},
                       {"top_degree_bound", bounds->top_degree_bound},
                       {"dimension_bound", bounds->dimension_bound},
                       {"top_within", stats.top_degree <= bounds->top_degree_bound},
                       {"dim_within", stats.dimension <= bounds->dimension_bound},
                       {"top_attained", stats.top_degree == bounds->top_degree_bound},
                       {"dim_attained", stats.dimension == bounds->dimension_bound}};
    } else {
      j["hsop"] = nullptr;
    }
    write_output(flags.out, dump_pretty(j));
    return hsop_ok ? kExitPass : kExitCheckFailure;
  }

  std::ostringstream os;
  os << "rep: p=" << rep.p() << " r=" << rep.r() << " s=" << rep.s() << " weights=["
     << join_u32(rep.weights()) << "]  order: " << order.label << "\n";
  os << "dimension: " << stats.dimension << "\n";
  os << "top degree: " << stats.top_degree << " (formula: " << formula << ")\n";
  os << "lead term generators:";
  for (const Monomial& m : stats.lt_generators) os << " " << render_monomial(layout, m);
  os << "\nstandard monomials by degree:\n";
  std::uint32_t d = 0;
  bool open = false;
  for (const Monomial& m : stats.standard_monomials) {
    if (!open || m.degree() != d) {
      if (open) os << "\n";
      d = m.degree();
      os << "  " << d << ":";
      open = true;
    }
    os << " " << render_monomial(layout, m);
  }
  if (open) os << "\n";
  if (bounds) {
    os << "hsop degrees [" << join_u32(cfg.hsop_degrees) << "]: top bound "
       << bounds->top_degree_bound << (stats.top_degree == bounds->top_degree_bound
                                           ? " (attained)"
                                           : "")
       << ", dimension bound " << bounds->dimension_bound
       << (stats.dimension == bounds->dimension_bound ? " (attained)" : "") << "\n";
    if (!hsop_ok) os << "hsop bounds VIOLATED\n";
  }
  write_output(flags.out, os.str());
  return hsop_ok ? kExitPass : kExitCheckFailure;
}

struct SchmidFlags {
  std::uint32_t p = 3;
  std::vector<std::uint32_t> seq;
  std::vector<std::size_t> pair;  // 1-based
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool require_pair = false;
  bool json = false;
  std::string out;
};

// Checks every equal pair of the sequence; returns the pairs with no
// completion (empty = proposition holds on this sequence).
std::vector<std::pair<std::size_t, std::size_t>> uncompletable_pairs(
    const std::vector<ZmodP>& seq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j] && !zerosum_completion(seq, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

int run_schmid(const SchmidFlags& flags) {
  if (flags.p < 2) throw std::invalid_argument("schmid: need p >= 2");

  if (!flags.seq.empty()) {
    const std::vector<ZmodP> seq = make_residues(flags.seq, flags.p);
    Json j{{"p", flags.p}, {"sequence", flags.seq}};
    std::ostringstream os;
    os << "sequence mod " << flags.p << ": " << join_u32(flags.seq) << "\n";
    int rc = kExitPass;

    if (!flags.pair.empty()) {
      if (flags.pair.size() != 2 || flags.pair[0] == 0 || flags.pair[1] == 0 ||
          flags.pair[0] > seq.size() || flags.pair[1] > seq.size() ||
          flags.pair[0] == flags.pair[1]) {
        throw std::invalid_argument("schmid: --pair needs two distinct 1-based positions");
      }
      const auto subset = zerosum_completion(seq, flags.pair[0] - 1, flags.pair[1] - 1);
      j["pair"] = flags.pair;
      if (subset) {
        std::vector<std::size_t> one_based;
        for (std::size_t i : *subset) one_based.push_back(i + 1);
        j["subset"] = one_based;
        os << "pair (" << flags.pair[0] << "," << flags.pair[1] << ") completes with subset {";
        for (std::size_t i = 0; i < one_based.size(); ++i) {
          os << (i ? "," : "") << one_based[i];
        }
        os << "}\n";
      } else {
        j["subset"] = nullptr;
        os << "pair (" << flags.pair[0] << "," << flags.pair[1] << ") has no completion\n";
        if (flags.require_pair) rc = kExitCheckFailure;
      }
    } else {
      const ZeroSumWitness w = schmid_zero_sum(seq);
      std::vector<std::size_t> one_based;
      for (std::size_t i : w.subset) one_based.push_back(i + 1);
      j["pair"] = std::vector<std::size_t>{w.k1 + 1, w.k2 + 1};
      j["subset"] = one_based;
      os << "witness: pair (" << w.k1 + 1 << "," << w.k2 + 1 << "), subset {";
      for (std::size_t i = 0; i < one_based.size(); ++i) os << (i ? "," : "") << one_based[i];
      os << "}\n";
    }
    write_output(flags.out, flags.json ? dump_pretty(j) : os.str());
    return rc;
  }

  if (flags.exhaustive) {
    // Every sequence of length p+1 over the nonzero residues.
    const std::uint32_t t = flags.p + 1;
    std::vector<std::uint32_t> values(t, 1);
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::ostringstream os;
    Json failing = Json::array();
    while (true) {
      const std::vector<ZmodP> seq = make_residues(values, flags.p);
      const auto bad = uncompletable_pairs(seq);
      ++checked;
      if (!bad.empty()) {
        ++failures;
        if (failures <= 10) {
          Json item{{"sequence", values},
                    {"pair", std::vector<std::size_t>{bad[0].first + 1, bad[0].second + 1}}};
          failing.push_back(item);
          os << "no completion: sequence (" << join_u32(values) << "), pair ("
             << bad[0].first + 1 << "," << bad[0].second + 1 << ")\n";
        }
      }
      // Odometer over {1..p-1}^t.
      std::size_t pos = 0;
      while (pos < t && values[pos] == flags.p - 1) {
        values[pos] = 1;
        ++pos;
      }
      if (pos == t) break;
      ++values[pos];
    }
    os << "checked " << checked << " sequences of length " << t << " mod " << flags.p << ": "
       << failures << " without a completable pair\n";
    Json j{{"p", flags.p},
           {"length", t},
           {"checked", checked},
           {"failures", failures},
           {"failing_examples", std::move(failing)}};
    write_output(flags.out, flags.json ? dump_pretty(j) : os.str());
    return failures == 0 ? kExitPass : kExitCheckFailure;
  }

  if (flags.samples > 0) {
    SplitMix64 rng(flags.seed);
    const std::uint32_t t = flags.p + 1;
    std::uint64_t failures = 0;
    std::ostringstream os;
    for (std::uint64_t n = 0; n < flags.samples; ++n) {
      std::vector<std::uint32_t> values(t);
      for (auto& v : values) v = static_cast<std::uint32_t>(rng.below(flags.p - 1)) + 1;
      const std::vector<ZmodP> seq = make_residues(values, flags.p);
      if (!uncompletable_pairs(seq).empty()) {
        ++failures;
        if (failures <= 10) os << "no completion: sequence (" << join_u32(values) << ")\n";
      }
    }
    os << "sampled " << flags.samples << " sequences of length " << t << " mod " << flags.p
       << " (seed " << flags.seed << "): " << failures << " without a completable pair\n";
    Json j{{"p", flags.p},
           {"length", t},
           {"samples", flags.samples},
           {"seed", flags.seed},
           {"failures", failures}};
    write_output(flags.out, flags.json ? dump_pretty(j) : os.str());
    return failures == 0 ? kExitPass : kExitCheckFailure;
  }

  throw std::invalid_argument("schmid: need one of --seq, --exhaustive, --samples");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert ideals of dihedral groups in characteristic two"};
  app.require_subcommand(1);
  int rc = kExitPass;

  RepFlags field_flags;
  CLI::App* field_cmd = app.add_subcommand("field", "print the GF(2^k) descriptor for p");
  field_flags.attach(field_cmd, false);
  field_cmd->callback([&] { rc = guarded([&] { return run_field(field_flags); }); });

  RepFlags basis_flags;
  CLI::App* basis_cmd =
      app.add_subcommand("basis", "print Hilbert-ideal generators and the universal basis");
  basis_flags.attach(basis_cmd, false);
  basis_cmd->callback([&] { rc = guarded([&] { return run_basis(basis_flags); }); });

  RepFlags verify_flags;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "cross-check the universal basis against Buchberger");
  verify_flags.attach(verify_cmd, true);
  verify_cmd->callback([&] { rc = guarded([&] { return run_verify(verify_flags); }); });

  RepFlags coinv_flags;
  std::string coinv_order = "grevlex";
  CLI::App* coinv_cmd =
      app.add_subcommand("coinv", "coinvariant dimension, top degree, standard monomials");
  coinv_flags.attach(coinv_cmd, true);
  coinv_cmd->add_option("--order", coinv_order, "lex, grlex, grevlex, or lex-swapped");
  coinv_cmd->callback(
      [&] { rc = guarded([&] { return run_coinv(coinv_flags, coinv_order); }); });

  SchmidFlags schmid_flags;
  CLI::App* schmid_cmd =
      app.add_subcommand("schmid", "zero-sum pair splitting over Z/p");
  schmid_cmd->add_option("-p,--prime", schmid_flags.p, "modulus p")->required();
  schmid_cmd->add_option("--seq", schmid_flags.seq, "sequence of nonzero residues")
      ->delimiter(',');
  schmid_cmd->add_option("--pair", schmid_flags.pair, "1-based equal pair to complete")
      ->delimiter(',');
  schmid_cmd->add_flag("--exhaustive", schmid_flags.exhaustive,
                       "check every sequence of length p+1");
  schmid_cmd->add_option("--samples", schmid_flags.samples, "check seeded random sequences");
  schmid_cmd->add_option("--seed", schmid_flags.seed, "seed for --samples");
  schmid_cmd->add_flag("--require-pair", schmid_flags.require_pair,
                       "fail (exit 1) when --pair has no completion");
  schmid_cmd->add_flag("--json", schmid_flags.json, "emit JSON instead of text");
  schmid_cmd->add_option("--out", schmid_flags.out, "output path ('-' = stdout)");
  schmid_cmd->callback([&] { rc = guarded([&] { return run_schmid(schmid_flags); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  return rc;
}
