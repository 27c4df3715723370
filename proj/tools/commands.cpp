#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>

#include "kummerlab/boxes.hpp"
#include "kummerlab/buchstab.hpp"
#include "kummerlab/characters.hpp"
#include "kummerlab/construction.hpp"
#include "kummerlab/csv.hpp"
#include "kummerlab/errors.hpp"
#include "kummerlab/fourier.hpp"
#include "kummerlab/io.hpp"
#include "kummerlab/kummer.hpp"
#include "kummerlab/primes.hpp"
#include "kummerlab/symmetric.hpp"

namespace kummerlab::cli {

namespace {

using nlohmann::json;
using u64 = std::uint64_t;

/// stdout, or the file named by --out.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ValidationError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

ExactRational rational_arg(const std::string& text, const char* name) {
  const ExactRational v = ExactRational::parse(text);
  if (text.find_first_of(".eE") != std::string::npos) {
    std::cerr << "warning: " << name << " " << text << " read as the exact rational "
              << v.to_string() << '\n';
  }
  return v;
}

/// Integer argument, also accepting the form 1e7.
BigInt integer_arg(const std::string& text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) return parse_big(text);
  const std::string exp = text.substr(e + 1);
  if (exp.empty() || exp.size() > 4 || exp.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError("malformed integer: " + text);
  }
  BigInt ten = 10;
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), std::stoul(exp));
  return parse_big(text.substr(0, e)) * scale;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string fmt_opt(const std::optional<long double>& v) { return v ? fmt_real(*v) : ""; }

json density_rows_json(const std::vector<DensityRow>& rows) {
  json out = json::array();
  for (const DensityRow& r : rows) {
    out.push_back({{"p", r.p},
                   {"alpha", r.alpha},
                   {"beta", r.beta},
                   {"B", r.B},
                   {"m", r.m},
                   {"size", r.size},
                   {"ratio", fmt_real(r.ratio)},
                   {"log_inv_ratio", fmt_real(r.log_inv_ratio)}});
  }
  return out;
}

/// Shared --M/--C/--theta options.
struct ParamArgs {
  u64 M = 10;
  std::string C = "2";
  std::string theta = "9/10";
  std::string t_max = "1";

  void add(CLI::App* cmd, bool with_tmax = false) {
    cmd->add_option("--M", M, "Seed size M")->required();
    cmd->add_option("--C", C, "Band ratio C > 1, as a/b or decimal")->capture_default_str();
    cmd->add_option("--theta", theta, "Strip parameter 0 < theta < 1, as a/b or decimal")
        ->capture_default_str();
    if (with_tmax) cmd->add_option("--tmax", t_max, "Largest multiplier scanned")->required();
  }
  ConstructionParams params() const {
    return make_params(M, rational_arg(C, "C"), rational_arg(theta, "theta"), integer_arg(t_max));
  }
};

// ---------------------------------------------------------------------------

void add_f(CLI::App& app, Globals& g) {
  struct Args {
    std::string n;
    std::optional<u64> k_max;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("f", "Print f(n), the least k with u_k(n) > n^2, or none");
  cmd->add_option("n", a->n, "Integer n >= 1")->required();
  cmd->add_option("--kmax", a->k_max, "Search only k <= kmax");
  cmd->callback([&g, a] {
    g.action = [&g, a] {
      const BigInt n = parse_big(a->n);
      if (n < 1) throw ValidationError("n must be >= 1");
      const auto f = f_exact(n, a->k_max, g.workers);
      std::cout << (f ? std::to_string(*f) : std::string("none")) << '\n';
      return 0;
    };
  });
}

void add_table(CLI::App& app, Globals& g) {
  struct Args {
    u64 min = 1;
    u64 max = 0;
    std::string out;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("table", "CSV of n, f(n), f/log n, f/(log n)^2");
  cmd->add_option("--min", a->min, "First n")->capture_default_str();
  cmd->add_option("--max", a->max, "Last n")->required();
  cmd->add_option("--out", a->out, "Output CSV (default stdout)");
  cmd->callback([&g, a] {
    g.action = [&g, a] {
      if (a->min < 1 || a->max < a->min) throw ValidationError("need 1 <= min <= max");
      Sink sink(a->out);
      CsvWriter csv(sink.stream());
      csv.row({"n", "f", "f_over_log_n", "f_over_log_n_sq"});
      for (u64 n = a->min; n <= a->max; ++n) {
        const auto f = f_exact(big_from_u64(n), std::nullopt, g.workers);
        const long double L = std::log(static_cast<long double>(n));
        if (!f) {
          csv.row({std::to_string(n), "none", "", ""});
        } else if (n == 1) {
          csv.row({std::to_string(n), std::to_string(*f), "", ""});
        } else {
          const auto fv = static_cast<long double>(*f);
          csv.row({std::to_string(n), std::to_string(*f), fmt_real(fv / L), fmt_real(fv / (L * L))});
        }
      }
      return 0;
    };
  });
}

void add_seed_apssv(CLI::App& app, Globals& g) {
  struct Args {
    u64 K = 0;
    std::string out;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("seed-apssv", "Seed M_K and its certificate f(M_K - 1) > K");
  cmd->add_option("--K", a->K, "K >= 2")->required();
  cmd->add_option("--out", a->out, "Also write the certificate JSON here");
  cmd->callback([&g, a] {
    g.action = [&g, a] {
      const FactoredNat seed = apssv_seed(a->K);
      const FLowerCertificate cert = verify_f_lower(seed.to_integer() - 1, a->K, g.workers);
      const std::string text = apssv_certificate_json(seed, cert);
      std::cout << text << '\n';
      if (!a->out.empty()) Sink(a->out).stream() << text << '\n';
      if (!cert.passed) {
        throw Failure(kExitCertificate, "CertificateFailed",
                      "u_k > n^2 at k = " + std::to_string(*cert.first_violation));
      }
      return 0;
    };
  });
}

void add_construct(CLI::App& app, Globals& g) {
  struct Args {
    ParamArgs p;
    std::string out;
    u64 budget = kDefaultEnumerationBudget;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("construct", "Search a multiplier t, assemble n = t L_M - 1, verify");
  a->p.add(cmd, true);
  cmd->add_option("--out", a->out, "Also write the certificate JSON here");
  cmd->add_option("--budget", a->budget, "Largest local modulus enumerated")->capture_default_str();
  cmd->callback([&g, a] {
    g.action = [&g, a] {
      const ConstructionParams params = a->p.params();
      const SearchResult search = multiplier_search(params, g.workers, a->budget);
      if (!search.t) {
        throw Failure(kExitBudget, "SearchExhausted",
                      "no multiplier t <= " + to_decimal(params.t_max),
                      {{"acceptance", density_rows_json(search.scan_order)}});
      }
      const BigInt t = big_from_u64(*search.t);
      const DensityReport dens = density(params, a->budget);
      const Certificate cert = verify_construction(assemble_n(t, params), params, g.workers);
      const std::string cert_text = construction_certificate_json(cert, t);
      json report = {{"M", params.M},
                     {"C", params.C.to_string()},
                     {"theta", params.theta.to_string()},
                     {"K", params.K},
                     {"t_max", to_decimal(params.t_max)},
                     {"t", to_decimal(t)},
                     {"density",
                      {{"rows", density_rows_json(dens.rows)},
                       {"log_delta_inv", fmt_real(dens.log_delta_inv)},
                       {"leading_order", fmt_real(dens.leading_order)}}},
                     {"scan_order", density_rows_json(search.scan_order)},
                     {"certificate", json::parse(cert_text)}};
      std::cout << report.dump(2) << '\n';
      if (!a->out.empty()) Sink(a->out).stream() << cert_text << '\n';
      if (!cert.verdict) throw Failure(kExitCertificate, "CertificateFailed", "construction certificate failed");
      return 0;
    };
  });
}

void add_verify(CLI::App& app, Globals& g) {
  struct Args {
    std::string cert;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("verify", "Re-run the checks recorded in a certificate");
  cmd->add_option("--cert", a->cert, "Certificate JSON (or construct output)")->required();
  cmd->callback([&g, a] {
    g.action = [&g, a] {
      std::string text = read_file(a->cert);
      try {
        const json j = json::parse(text);
        if (j.is_object() && j.contains("certificate")) text = j.at("certificate").dump();
      } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed certificate: ") + e.what());
      }
      const CertificateDocument doc = parse_certificate(text);
      bool verdict = false;
      bool match = false;
      if (doc.kind == "apssv") {
        const FLowerCertificate fresh = verify_f_lower(apssv_seed(doc.K).to_integer() - 1, doc.K, g.workers);
        verdict = fresh.passed;
        match = fresh.passed == doc.verdict && fresh.first_violation == doc.first_violation &&
                fresh.argmax_k == doc.argmax_k;
      } else {
        const ConstructionParams params = make_params(doc.M, doc.C, doc.theta);
        if (params.K != doc.K) throw ValidationError("certificate K disagrees with floor(C M)");
        Certificate fresh;
        try {
          fresh = verify_construction(assemble_n(doc.t, params), params, g.workers);
        } catch (const MissingLevels& e) {
          throw Failure(kExitCertificate, "CertificateFailed", e.what());
        }
        verdict = fresh.verdict;
        match = fresh.verdict == doc.verdict && fresh.records == doc.records;
      }
      std::cout << json{{"kind", doc.kind}, {"verdict", verdict}, {"records_match", match}}.dump(2) << '\n';
      if (!verdict || !match) {
        throw Failure(kExitCertificate, "CertificateFailed",
                      !verdict ? "recomputed certificate fails" : "recorded checks differ from recomputation");
      }
      return 0;
    };
  });
}

void add_density(CLI::App& app, Globals& g) {
  struct Args {
    ParamArgs p;
    std::string out;
    u64 budget = kDefaultEnumerationBudget;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("density", "Per-prime |A_p|/m_p and log(1/delta)");
  a->p.add(cmd);
  cmd->add_option("--out", a->out, "Output CSV (default stdout)");
  cmd->add_option("--budget", a->budget, "Largest local modulus enumerated")->capture_default_str();
  cmd->callback([&g, a] {
    g.action = [a] {
      const DensityReport d = density(a->p.params(), a->budget);
      Sink sink(a->out);
      CsvWriter csv(sink.stream());
      csv.row({"p", "alpha", "beta", "B", "m", "size", "ratio", "log_inv_ratio"});
      for (const DensityRow& r : d.rows) {
        csv.row({std::to_string(r.p), std::to_string(r.alpha), std::to_string(r.beta), std::to_string(r.B),
                 std::to_string(r.m), std::to_string(r.size), fmt_real(r.ratio), fmt_real(r.log_inv_ratio)});
      }
      csv.row({"total", "", "", "", "", "", "", fmt_real(d.log_delta_inv)});
      csv.row({"leading_order", "", "", "", "", "", "", fmt_real(d.leading_order)});
      return 0;
    };
    (void)g;
  });
}

void add_fourier(CLI::App& app, Globals& g) {
  struct Args {
    ParamArgs p;
    unsigned shell = 1;
    std::int64_t h_cap = 5;
    std::string N = "1000";
    u64 count_cap = 1000000;
    std::string rows;
    std::optional<u64> local;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("fourier", "Partial Fourier criterion sum over top-band prefix modes");
  a->p.add(cmd);
  cmd->add_option("--shell", a->shell, "Support size s")->capture_default_str();
  cmd->add_option("--hcap", a->h_cap, "Largest |h_p|")->capture_default_str();
  cmd->add_option("--N", a->N, "Scale N")->capture_default_str();
  cmd->add_option("--count-cap", a->count_cap, "Most modes summed")->capture_default_str();
  cmd->add_option("--rows", a->rows, "Write one CSV row per mode here");
  cmd->add_option("--local", a->local, "Instead print the normalized DFT of A_p for this p");
  cmd->callback([&g, a] {
    g.action = [&g, a] {
      const FourierContext ctx = FourierContext::make(a->p.params());
      if (a->local) {
        const LocalFourier F = local_fourier(LocalSet::build(*a->local, ctx.params));
        CsvWriter csv(std::cout);
        csv.row({"xi", "re", "im", "normalized"});
        for (u64 xi = 0; xi < F.m; ++xi) {
          csv.row({std::to_string(xi), fmt_real(F.coeff[xi].real()), fmt_real(F.coeff[xi].imag()),
                   fmt_real(F.normalized(xi))});
        }
        return 0;
      }
      const CriterionSum s = criterion_partial_sum(ctx, integer_arg(a->N), a->shell, a->h_cap, a->count_cap,
                                                   g.workers, !a->rows.empty());
      if (!a->rows.empty()) {
        Sink sink(a->rows);
        CsvWriter csv(sink.stream());
        csv.row({"primes", "heights", "phi", "norm", "weight", "term"});
        for (const CriterionRow& r : s.rows) {
          std::string ps;
          std::string hs;
          for (std::size_t i = 0; i < r.primes.size(); ++i) {
            ps += (i ? " " : "") + std::to_string(r.primes[i]);
            hs += (i ? " " : "") + std::to_string(r.heights[i]);
          }
          csv.row({ps, hs, r.phi.to_string(), r.norm.to_string(), fmt_real(r.weight), fmt_real(r.term)});
        }
      }
      std::cout << json{{"M", ctx.params.M},
                        {"C", ctx.params.C.to_string()},
                        {"theta", ctx.params.theta.to_string()},
                        {"shell", a->shell},
                        {"h_cap", a->h_cap},
                        {"N", a->N},
                        {"value", fmt_real(s.value)},
                        {"modes", s.modes},
                        {"truncated", s.truncated}}
                       .dump(2)
                << '\n';
      return 0;
    };
  });
}

void add_boxes(CLI::App& app, Globals& g) {
  struct Args {
    ParamArgs p;
    bool census = false;
    bool histogram = false;
    std::vector<u64> U;
    std::vector<u64> W;
    unsigned a = 1;
    u64 R = 100;
    std::string xi = "0";
    u64 prime = 0;
    u64 r_max = 0;
    unsigned grid = 20;
    std::string out;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("boxes", "Q_M-box census T_R or height histogram N_p(t)");
  a->p.add(cmd);
  auto* census = cmd->add_flag("--census", a->census, "Weighted census against its two bound terms");
  auto* hist = cmd->add_flag("--histogram", a->histogram, "N_p(t) over a t grid");
  census->excludes(hist);
  cmd->add_option("--U", a->U, "Core primes");
  cmd->add_option("--W", a->W, "Petal pool (census; default the whole top band)");
  cmd->add_option("--a", a->a, "Petals per box")->capture_default_str();
  cmd->add_option("--R", a->R, "Census range R < |r| <= 2R")->capture_default_str();
  cmd->add_option("--xi", a->xi, "Census class rho_U(A, r)")->capture_default_str();
  cmd->add_option("--p", a->prime, "Histogram prime");
  cmd->add_option("--rmax", a->r_max, "Histogram family 0 < |r| <= rmax (default prod of the band)");
  cmd->add_option("--grid", a->grid, "Histogram grid points")->capture_default_str();
  cmd->add_option("--out", a->out, "Output CSV (default stdout)");
  cmd->callback([&g, a] {
    g.action = [a] {
      if (a->census == a->histogram) throw ValidationError("choose exactly one of --census, --histogram");
      const ConstructionParams params = a->p.params();
      Sink sink(a->out);
      CsvWriter csv(sink.stream());
      if (a->census) {
        const FourierContext ctx = FourierContext::make(params);
        const std::vector<u64> W = a->W.empty() ? ctx.top_band() : a->W;
        const CensusResult c = t_r_census(ctx, a->U, W, a->a, a->R, parse_big(a->xi));
        csv.row({"a", "R", "xi", "boxes", "weighted", "e_term", "tail_term", "ratio"});
        csv.row({std::to_string(a->a), std::to_string(a->R), a->xi, std::to_string(c.boxes), fmt_real(c.weighted),
                 fmt_real(c.e_term), fmt_real(c.tail_term), fmt_real(c.ratio)});
        return 0;
      }
      if (a->prime == 0) throw ValidationError("--histogram needs --p");
      u64 r_max = a->r_max;
      if (r_max == 0) {
        r_max = 1;
        for (u64 q : sieve_primes(params.K)) {
          if (q > params.M) r_max *= q;
        }
      }
      const auto family = enumerate_box_family(params.M, params.K, a->U, a->a, r_max);
      const std::int64_t H = static_cast<std::int64_t>((a->prime - 1) / 2);
      std::vector<std::int64_t> grid;
      for (unsigned i = 0; i < a->grid; ++i) {
        grid.push_back(a->grid == 1 ? H : static_cast<std::int64_t>(i) * H / static_cast<std::int64_t>(a->grid - 1));
      }
      csv.row({"t", "N_p", "ratio"});
      for (const HistogramRow& r : height_histogram(a->prime, family, grid)) {
        csv.row({std::to_string(r.t), std::to_string(r.count), fmt_opt(r.ratio)});
      }
      return 0;
    };
    (void)g;
  });
}

void add_charsum(CLI::App& app, Globals& g) {
  struct Args {
    u64 p = 0;
    std::optional<u64> j;
    u64 ell = 1;
    std::optional<u64> M;
    std::string C = "2";
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("charsum", "Band character sums over primes in (M, CM]");
  cmd->add_option("--p", a->p, "Prime modulus")->required();
  cmd->add_option("--j", a->j, "Character index (default: every nonprincipal chi^ell)");
  cmd->add_option("--ell", a->ell, "Power ell")->capture_default_str();
  cmd->add_option("--M", a->M, "Band start (default p - 1)");
  cmd->add_option("--C", a->C, "Band ratio")->capture_default_str();
  cmd->callback([&g, a] {
    g.action = [a] {
      const u64 M = a->M.value_or(a->p - 1);
      const ExactRational C = rational_arg(a->C, "C");
      CsvWriter csv(std::cout);
      csv.row({"p", "g", "j", "ell", "M", "C", "band", "re", "im", "normalized"});
      auto emit = [&](const Character& chi) {
        const BandSum s = band_char_sum(chi, a->ell, M, C);
        csv.row({std::to_string(chi.p()), std::to_string(chi.g()), std::to_string(chi.j()), std::to_string(a->ell),
                 std::to_string(M), C.to_string(), std::to_string(s.band), fmt_real(s.sum.real()),
                 fmt_real(s.sum.imag()), fmt_real(s.normalized)});
      };
      if (a->j) {
        emit(Character(a->p, *a->j));
      } else {
        const Character base(a->p, 1);
        for (u64 j = 1; j + 1 < a->p; ++j) {
          const Character chi(a->p, base.g(), j);
          if (!chi.power(a->ell).principal()) emit(chi);
        }
      }
      return 0;
    };
    (void)g;
  });
}

void add_mixing(CLI::App& app, Globals& g) {
  struct Args {
    u64 p = 0;
    u64 j = 1;
    u64 k = 1;
    std::optional<u64> M;
    std::string C = "2";
    std::vector<u64> classes;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("mixing", "|[z^k] prod (1 + z chi(q))| against binom(|V|, k)");
  cmd->add_option("--p", a->p, "Prime modulus");
  cmd->add_option("--j", a->j, "Character index")->capture_default_str();
  cmd->add_option("--k", a->k, "Degree k")->required();
  cmd->add_option("--M", a->M, "V = primes in (M, CM] other than p (default M = p - 1)");
  cmd->add_option("--C", a->C, "Band ratio")->capture_default_str();
  cmd->add_option("--classes", a->classes, "Synthetic class counts n_0 .. n_{d-1} instead of a band");
  cmd->callback([&g, a] {
    g.action = [a] {
      MixingReport r;
      json extra = json::object();
      if (!a->classes.empty()) {
        r = mixing_from_classes(a->classes, a->k);
      } else {
        if (a->p == 0) throw ValidationError("mixing needs --p or --classes");
        const u64 M = a->M.value_or(a->p - 1);
        const u64 K = *to_u64((rational_arg(a->C, "C") * ExactRational(big_from_u64(M), 1)).floor());
        std::vector<u64> V;
        for (u64 q : sieve_primes(K)) {
          if (q > M && q != a->p) V.push_back(q);
        }
        const Character chi(a->p, a->j);
        r = mixing_ratio(V, chi, a->k);
        extra = {{"p", a->p}, {"g", chi.g()}, {"j", chi.j()}, {"M", M}, {"K", K}};
      }
      json coeff = json::array();
      for (const BigInt& c : r.coeff.coefficients()) coeff.push_back(to_decimal(c));
      json out = {{"size", r.size},
                  {"d", r.d},
                  {"k", r.k},
                  {"counts", r.counts},
                  {"coeff", coeff},
                  {"coeff_abs", fmt_real(r.coeff_abs)},
                  {"norm", r.norm ? json(to_decimal(*r.norm)) : json(nullptr)},
                  {"binom", to_decimal(r.binom_ref)},
                  {"ratio", fmt_real(r.ratio)},
                  {"balanced", r.balanced}};
      out.update(extra);
      std::cout << out.dump(2) << '\n';
      return 0;
    };
    (void)g;
  });
}

void add_denom(CLI::App& app, Globals& g) {
  struct Args {
    ParamArgs p;
    u64 count = 1000;
    u64 seed = 684;
    std::string out;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("denom", "Seeded random check of the exact denominator law");
  a->p.add(cmd);
  cmd->add_option("--count", a->count, "Vectors drawn")->capture_default_str();
  cmd->add_option("--seed", a->seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--out", a->out, "Output CSV (default stdout)");
  cmd->callback([&g, a] {
    g.action = [a] {
      const FourierContext ctx = FourierContext::make(a->p.params());
      const auto primes = sieve_primes(ctx.params.K);
      std::mt19937_64 rng(a->seed);
      Sink sink(a->out);
      sink.stream() << "# seed=" << a->seed << '\n';
      CsvWriter csv(sink.stream());
      csv.row({"vector", "phi", "q_formula", "q_reduced", "norm", "equal", "norm_bound"});
      bool all = true;
      for (u64 i = 0; i < a->count;) {
        std::map<u64, std::int64_t> e;
        for (u64 p : primes) {
          if (rng() % 2) e[p] = static_cast<std::int64_t>(rng() % ctx.at(p).m);
        }
        const FreqVector v = make_freq(ctx, e);
        if (v.support.empty()) continue;
        const DenominatorCheck c = check_denominator(ctx, v);
        std::string vs;
        for (const auto& [p, x] : v.support) vs += (vs.empty() ? "" : " ") + std::to_string(p) + ":" + std::to_string(x);
        csv.row({vs, c.value.to_string(), to_decimal(c.formula), to_decimal(c.reduced), c.norm.to_string(),
                 c.equal ? "1" : "0", c.norm_bound ? "1" : "0"});
        all = all && c.equal && c.norm_bound;
        ++i;
      }
      if (!all) throw Failure(kExitCertificate, "CertificateFailed", "denominator law violated");
      return 0;
    };
    (void)g;
  });
}

void add_pivot(CLI::App& app, Globals& g) {
  struct Args {
    u64 count = 100;
    u64 length = 30;
    u64 k = 10;
    u64 seed = 684;
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("pivot", "Seeded random check of sum_p w_p e_{k-1}(rest) = k e_k");
  cmd->add_option("--count", a->count, "Lists drawn")->capture_default_str();
  cmd->add_option("--length", a->length, "Weights per list")->capture_default_str();
  cmd->add_option("--k", a->k, "Degree")->capture_default_str();
  cmd->add_option("--seed", a->seed, "64-bit seed")->capture_default_str();
  cmd->callback([&g, a] {
    g.action = [&g, a] {
      std::mt19937_64 rng(a->seed);
      std::vector<std::vector<long double>> lists(a->count, std::vector<long double>(a->length));
      for (auto& l : lists) {
        for (auto& w : l) w = static_cast<long double>(rng() >> 11) / static_cast<long double>(1ull << 53);
      }
      const auto checks = pivot_identity_batch(lists, a->k, g.workers);
      std::cout << "# seed=" << a->seed << '\n';
      CsvWriter csv(std::cout);
      csv.row({"list", "lhs", "rhs", "rel_error"});
      for (std::size_t i = 0; i < checks.size(); ++i) {
        csv.row({std::to_string(i), fmt_real(checks[i].lhs), fmt_real(checks[i].rhs), fmt_real(checks[i].rel_error)});
      }
      return 0;
    };
  });
}

void add_buchstab(CLI::App& app, Globals& g) {
  struct Args {
    std::uint32_t limit = 100000;
    u64 M = 10;
    std::string C = "2";
  };
  auto a = std::make_shared<Args>();
  auto* cmd = app.add_subcommand("buchstab", "Exhaustive finite Buchstab identity over squarefree n");
  cmd->add_option("--limit", a->limit, "Largest n")->capture_default_str();
  cmd->add_option("--M", a->M, "Band start")->capture_default_str();
  cmd->add_option("--C", a->C, "Band ratio")->capture_default_str();
  cmd->callback([&g, a] {
    g.action = [&g, a] {
      const BuchstabScan s = buchstab_scan(a->limit, a->M, rational_arg(a->C, "C"), g.workers);
      std::cout << json{{"limit", a->limit}, {"checked", s.checked}, {"failures", s.failures}}.dump(2) << '\n';
      if (!s.failures.empty()) throw Failure(kExitCertificate, "CertificateFailed", "identity fails");
      return 0;
    };
  });
}

}  // namespace

void register_commands(CLI::App& app, Globals& g) {
  add_f(app, g);
  add_table(app, g);
  add_seed_apssv(app, g);
  add_construct(app, g);
  add_verify(app, g);
  add_density(app, g);
  add_fourier(app, g);
  add_boxes(app, g);
  add_charsum(app, g);
  add_mixing(app, g);
  add_denom(app, g);
  add_pivot(app, g);
  add_buchstab(app, g);
}

}  // namespace kummerlab::cli
