// beltrami-lab: build the explicit curl eigenfields on the round 3-sphere
// and the flat 3-torus, certify the eigenvalue equations and nonvanishing,
// classify the induced contact structures, and verify the closed-form
// homotopies and open books.  Machine-readable JSON/CSV output throughout.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "beltrami/contact.hpp"
#include "beltrami/hopf_invariant.hpp"
#include "beltrami/openbook.hpp"
#include "beltrami/report.hpp"

using namespace beltrami;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text << "\n";
}

std::array<int, 3> parse_ivec(const std::string& s) {
  std::array<int, 3> v{};
  std::stringstream ss(s);
  char comma;
  if (!(ss >> v[0] >> comma >> v[1] >> comma >> v[2]))
    throw CLI::ValidationError("expected three comma-separated integers");
  return v;
}

std::array<Rational, 3> parse_rvec(const std::string& s) {
  std::array<Rational, 3> v{};
  std::stringstream ss(s);
  std::string tok;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, tok, ','))
      throw CLI::ValidationError("expected three comma-separated rationals");
    // accept "p/q" or a decimal with up to 9 fractional digits
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
      v[i] = Rational(boost::multiprecision::cpp_int(tok.substr(0, slash)),
                      boost::multiprecision::cpp_int(tok.substr(slash + 1)));
    } else {
      double d = std::stod(tok);
      v[i] = Rational(static_cast<long long>(std::llround(d * 1e9)),
                      1000000000LL);
    }
  }
  return v;
}

// eigenfunction spec "k1,k2:cos,sin;k1,k2:cos,sin;..."
std::vector<T2Mode> parse_modes(const std::string& s) {
  std::vector<T2Mode> modes;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("mode needs the form k1,k2:cos,sin");
    std::stringstream ks(item.substr(0, colon)), cs(item.substr(colon + 1));
    T2Mode m;
    char comma;
    double cc, sn;
    if (!(ks >> m.k[0] >> comma >> m.k[1]) || !(cs >> cc >> comma >> sn))
      throw CLI::ValidationError("mode needs the form k1,k2:cos,sin");
    m.c_cos = Rational(static_cast<long long>(std::llround(cc * 65536.0)), 65536);
    m.c_sin = Rational(static_cast<long long>(std::llround(sn * 65536.0)), 65536);
    modes.push_back(m);
  }
  return modes;
}

struct CommonFlags {
  bool sphere = false, torus = false;
  int m = 0;
  bool has_m = false;
  std::string k_str, b_str, field_name, modes_str;
  int eta = 0;
  bool has_eta = false;
  long long nodal_lambda = 0;
  std::uint64_t seed = 1;
  int grid = 0;
  double h = 1e-3;
  double tol = 1e-5;
  int trials = 100;
  std::string json_path, csv_path;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->set_help_flag("--help", "print help");
  cmd->add_flag("--sphere", f.sphere, "work on the round 3-sphere");
  cmd->add_flag("--torus", f.torus, "work on the flat 3-torus");
  cmd->add_option("--m", f.m, "eigenfield index (lambda = 2m on the sphere)")
      ->each([&f](const std::string&) { f.has_m = true; });
  cmd->add_option("--k", f.k_str, "integer wave vector a,b,c");
  cmd->add_option("--b", f.b_str, "amplitude vector p,q,r (rationals)");
  cmd->add_option("--eta", f.eta, "standard tight family index")
      ->each([&f](const std::string&) { f.has_eta = true; });
  cmd->add_option("--field", f.field_name,
                  "builtin field name (hopf|antihopf|v2|v3|nonkkps2)");
  cmd->add_option("--modes", f.modes_str,
                  "torus eigenfunction modes k1,k2:cos,sin;...");
  cmd->add_option("--nodal-search", f.nodal_lambda,
                  "search eigenvalue for a contractible nodal oval");
  cmd->add_option("--seed", f.seed, "rng seed for the nodal search");
  cmd->add_option("--trials", f.trials, "max trials for the nodal search");
  cmd->add_option("--grid,--n", f.grid, "grid resolution");
  cmd->add_option("--h", f.h, "finite-difference step");
  cmd->add_option("--tol", f.tol, "verification tolerance");
  cmd->add_option("--json", f.json_path, "write JSON to this file");
  cmd->add_option("--csv", f.csv_path, "write CSV to this file");
}

ClassifyOptions options_from(const CommonFlags& f) {
  ClassifyOptions opt;
  if (f.grid > 0) opt.grid = f.grid;
  opt.h = f.h;
  if (f.nodal_lambda > 0 && f.grid > 0) opt.nodal_grid = f.grid;
  return opt;
}

int run_classify(const CommonFlags& f) {
  ClassifyOptions opt = options_from(f);
  ContactReport rep;
  if (f.sphere) {
    if (!f.field_name.empty()) rep = classify_builtin(f.field_name, opt);
    else if (f.has_m) rep = classify_vm(f.m, opt);
    else throw CLI::ValidationError("classify --sphere needs --m or --field");
  } else if (f.torus) {
    if (f.has_eta) rep = classify_eta(f.eta, opt);
    else if (f.nodal_lambda > 0)
      rep = classify_nodal_search(f.nodal_lambda, f.trials, f.seed, opt);
    else if (!f.k_str.empty() && !f.b_str.empty())
      rep = classify_wave(WaveSpec(parse_ivec(f.k_str), parse_rvec(f.b_str)), opt);
    else if (!f.modes_str.empty()) {
      auto modes = parse_modes(f.modes_str);
      long long lam = 0;
      for (auto& m : modes)
        lam = static_cast<long long>(m.k[0]) * m.k[0] +
              static_cast<long long>(m.k[1]) * m.k[1];
      rep = classify_t2_ansatz(T2Eigenfunction(lam, modes), opt);
    } else
      throw CLI::ValidationError(
          "classify --torus needs --eta, --k/--b, --modes or --nodal-search");
  } else {
    throw CLI::ValidationError("classify needs --sphere or --torus");
  }
  emit(report_to_json(rep), f.json_path);
  if (rep.verdict == Verdict::Inconclusive && f.nodal_lambda > 0)
    return kExitVerification;
  return kExitOk;
}

int run_verify(const CommonFlags& f) {
  std::ostringstream table;
  bool ok = true;
  if (f.sphere) {
    if (!f.has_m) throw CLI::ValidationError("verify --sphere needs --m");
    AxisymmetricField v = std::abs(f.m) >= 2
                              ? build_Vm(f.m)
                              : (f.m == 1 ? hopf_field() : anti_hopf_field());
    double lambda = 2.0 * f.m;
    AxisymmetricField cu = curl_axisymmetric(v);
    bool exact = (cu.F() - v.F() * Rational(std::llround(lambda))).is_zero() &&
                 (cu.G() - v.G() * Rational(std::llround(lambda))).is_zero();
    SphereSampler sam = v.sampler();
    double worst = 0.0, worst_half = 0.0;
    int n = f.grid > 0 ? f.grid : 24;
    for (int i = 1; i < n; ++i) {
      double s = 0.05 + (M_PI / 2 - 0.1) * i / n;
      HopfPoint p{s, 1.0 + 0.37 * i, 0.3 + 0.53 * i};
      FrameVector c1 = curl_s3_numeric(sam, p, f.h, FdOrder::four);
      FrameVector c2 = curl_s3_numeric(sam, p, f.h / 2, FdOrder::four);
      FrameVector vv = v.eval_frame(p);
      worst = std::max({worst, std::abs(c1.f - lambda * vv.f),
                        std::abs(c1.f1 - lambda * vv.f1),
                        std::abs(c1.f2 - lambda * vv.f2)});
      worst_half = std::max({worst_half, std::abs(c2.f - lambda * vv.f),
                             std::abs(c2.f1 - lambda * vv.f1),
                             std::abs(c2.f2 - lambda * vv.f2)});
    }
    MinNormResult mn = min_norm(v);
    table << "check,value\n";
    table << "exact_curl_identity," << (exact ? 0.0 : 1.0) << "\n";
    table << "eig_residual_h," << worst << "\n";
    table << "eig_residual_h_half," << worst_half << "\n";
    table << "min_norm," << mn.value << "\n";
    ok = exact && worst < f.tol && mn.value > 0.0;
  } else if (f.torus) {
    TorusTrigField V = [&]() {
      if (f.has_eta) return eta_field(f.eta);
      if (!f.k_str.empty() && !f.b_str.empty())
        return build_Vk(WaveSpec(parse_ivec(f.k_str), parse_rvec(f.b_str)));
      throw CLI::ValidationError("verify --torus needs --eta or --k/--b");
    }();
    QuadExt lambda = f.has_eta ? QuadExt{Rational(f.eta), 0} : QuadExt{0, 1};
    bool exact = is_curl_eigenfield(V, lambda);
    table << "check,value\n";
    table << "exact_curl_identity," << (exact ? 0.0 : 1.0) << "\n";
    ok = exact;
    if (!f.has_eta) {
      WaveSpec ws(parse_ivec(f.k_str), parse_rvec(f.b_str));
      double nd = V.norm_deviation(ws.b_norm(), 16);
      table << "norm_deviation," << nd << "\n";
      ok = ok && nd < 1e-12;
    }
  } else {
    throw CLI::ValidationError("verify needs --sphere or --torus");
  }
  emit(table.str(), f.json_path.empty() ? f.csv_path : f.json_path);
  return ok ? kExitOk : kExitVerification;
}

int run_homotopy(const CommonFlags& f, const std::string& named,
                 const std::string& pair, int kl_k, int kl_l, double c) {
  std::ostringstream out;
  bool ok = true;
  if (!named.empty()) {
    NamedHomotopyResult r =
        verify_named_homotopy(named, f.grid > 0 ? f.grid : 64, 33, kl_k, kl_l);
    out << "name,min_margin,max_mismatch,value_t0,value_t1\n";
    out << named << "," << quantize15(r.margin) << ","
        << quantize15(r.max_mismatch) << "," << quantize15(r.value_at_t0)
        << "," << quantize15(r.value_at_t1) << "\n";
    ok = r.margin > 0.0 && r.max_mismatch < 1e-9;
  } else if (!pair.empty()) {
    auto comma = pair.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("--pair needs two names, e.g. v2,nonkkps2");
    FrameField A = builtin_example(pair.substr(0, comma));
    FrameField B = builtin_example(pair.substr(comma + 1));
    if (!A.lambda || !B.lambda || *A.lambda != *B.lambda)
      throw CLI::ValidationError("--pair needs matching eigenvalues");
    HomotopyMargin hm =
        check_linear_homotopy(A, B, *A.lambda, f.grid > 0 ? f.grid : 32);
    CollinearitySets cs =
        collinearity_sets_s3(A, B, f.grid > 0 ? f.grid : 32, 1e-8);
    C0Result c0 = compute_c0(cs);
    out << "pair,min_margin,flipped,c0\n";
    out << pair << "," << quantize15(hm.margin) << "," << (hm.flipped ? 1 : 0)
        << "," << quantize15(c0.c0) << "\n";
    ok = hm.margin > 0.0;
  } else if (f.torus && f.has_m) {
    auto [V, W] = torus_example_pair(f.m);
    CollinearitySets cs =
        collinearity_sets_t3(V, W, f.grid > 0 ? f.grid : 32, 1e-8);
    C0Result c0 = compute_c0(cs);
    double margin = check_shifted_homotopy_t3(V, W, c, f.m,
                                              f.grid > 0 ? f.grid : 24);
    out << "pair,c,c0,shifted_margin\n";
    out << "torus_example_m" << f.m << "," << c << "," << quantize15(c0.c0)
        << "," << quantize15(margin) << "\n";
    ok = margin > 0.0 && std::abs(c) < c0.c0;
  } else {
    throw CLI::ValidationError(
        "homotopy needs --named NAME, --pair A,B, or --torus --m M [--c C]");
  }
  emit(out.str(), f.json_path.empty() ? f.csv_path : f.json_path);
  return ok ? kExitOk : kExitVerification;
}

int run_sample(const CommonFlags& f) {
  int n = f.grid > 0 ? f.grid : 32;
  std::ostringstream out;
  if (f.sphere) {
    FrameField v = !f.field_name.empty()
                       ? builtin_example(f.field_name)
                       : frame_field_of(f.has_m && std::abs(f.m) >= 2
                                            ? build_Vm(f.m)
                                            : hopf_field());
    sample_csv(v, n, out);
  } else if (f.torus) {
    TorusTrigField V = [&]() {
      if (f.has_eta) return eta_field(f.eta);
      if (!f.k_str.empty() && !f.b_str.empty())
        return build_Vk(WaveSpec(parse_ivec(f.k_str), parse_rvec(f.b_str)));
      throw CLI::ValidationError("sample --torus needs --eta or --k/--b");
    }();
    sample_csv_t3(V, n, out);
  } else {
    throw CLI::ValidationError("sample needs --sphere or --torus");
  }
  emit(out.str(), f.csv_path);
  return kExitOk;
}

int run_nodal(const CommonFlags& f) {
  int n = f.grid > 0 ? f.grid : 256;
  if (f.nodal_lambda > 0) {
    ContractibleSearchResult sr =
        search_contractible(f.nodal_lambda, f.trials, f.seed, n);
    emit(nodal_to_json(sr.certificate), f.json_path);
    if (!sr.success) {
      std::cerr << sr.message << "\n";
      return kExitVerification;
    }
    return kExitOk;
  }
  if (!f.modes_str.empty()) {
    auto modes = parse_modes(f.modes_str);
    long long lam = 0;
    for (auto& m : modes)
      lam = static_cast<long long>(m.k[0]) * m.k[0] +
            static_cast<long long>(m.k[1]) * m.k[1];
    T2Eigenfunction fn(lam, modes);
    emit(nodal_to_json(extract_nodal_set(fn, n)), f.json_path);
    return kExitOk;
  }
  throw CLI::ValidationError("nodal needs --nodal-search or --modes");
}

int run_openbook(const CommonFlags& f, const std::string& book) {
  BookKind kind;
  if (book == "pi_minus") kind = BookKind::pi_minus;
  else if (book == "pi_tilde") kind = BookKind::pi_tilde;
  else throw CLI::ValidationError("--book must be pi_minus or pi_tilde");
  int n = f.grid > 0 ? f.grid : 256;
  PagePositivity page = page_area_positivity(kind, n);
  auto bindings = binding_positivity(kind);
  std::ostringstream out;
  out << "check,value\n";
  out << "page_min_margin," << quantize15(page.min_margin) << "\n";
  out << "page_max_mismatch," << quantize15(page.max_mismatch) << "\n";
  bool ok = page.min_margin > 0.0 && page.max_mismatch < 1e-9;
  for (const auto& b : bindings) {
    out << "binding_pairing(" << b.component << ")," << quantize15(b.pairing)
        << "\n";
    out << "binding_tangency(" << b.component << "),"
        << quantize15(b.tangency) << "\n";
    ok = ok && b.pairing > 0.0 && b.tangency < 1e-9;
  }
  emit(out.str(), f.json_path.empty() ? f.csv_path : f.json_path);
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "curl eigenfields and contact structures on the round S^3 and flat "
      "T^3: construction, certification, classification"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  CommonFlags flags;
  std::string named, pair, book;
  int kl_k = 1, kl_l = 1;
  double c_shift = 0.5;

  CLI::App* classify = app.add_subcommand("classify",
                                          "classify a field's contact structure");
  add_common(classify, flags);

  CLI::App* verify = app.add_subcommand("verify",
                                        "residual table for the eigen equation");
  add_common(verify, flags);

  CLI::App* homotopy =
      app.add_subcommand("homotopy", "contact homotopy margins");
  add_common(homotopy, flags);
  homotopy->add_option("--named", named,
                       "t3_sqrt2_class | ex_final | s3_kl_family");
  homotopy->add_option("--pair", pair, "two builtin sphere fields A,B");
  homotopy->add_option("--kl",
                       [&kl_k, &kl_l](const std::vector<std::string>& v) {
                         auto comma = v[0].find(',');
                         if (comma == std::string::npos) return false;
                         kl_k = std::stoi(v[0].substr(0, comma));
                         kl_l = std::stoi(v[0].substr(comma + 1));
                         return true;
                       },
                       "k,l parameters for s3_kl_family");
  homotopy->add_option("--c", c_shift, "shift amplitude for the torus pair");

  CLI::App* sample = app.add_subcommand("sample", "CSV field samples");
  add_common(sample, flags);

  CLI::App* nodal = app.add_subcommand("nodal", "nodal curve extraction");
  add_common(nodal, flags);

  CLI::App* openbook = app.add_subcommand("openbook",
                                          "open book compatibility margins");
  add_common(openbook, flags);
  openbook->add_option("--book", book, "pi_minus | pi_tilde")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return run_classify(flags);
    if (verify->parsed()) return run_verify(flags);
    if (homotopy->parsed())
      return run_homotopy(flags, named, pair, kl_k, kl_l, c_shift);
    if (sample->parsed()) return run_sample(flags);
    if (nodal->parsed()) return run_nodal(flags);
    if (openbook->parsed()) return run_openbook(flags, book);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
