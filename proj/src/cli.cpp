#include "ruelle/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "ruelle/alexander.hpp"
#include "ruelle/epstein.hpp"
#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"
#include "ruelle/ruelle.hpp"
#include "ruelle/torsion.hpp"
#include "ruelle/volume.hpp"

namespace ruelle::cli {

namespace {

using io::format_complex;
using io::format_double;

struct TwistChoice {
  std::string path;
  std::string xi;
};

void add_twist_options(CLI::App* sub, TwistChoice& choice) {
  auto* t = sub->add_option("--twist", choice.path, "twist file");
  auto* x = sub->add_option("--xi", choice.xi, "rank-one character value as re,im");
  t->excludes(x);
}

std::optional<TwistData> load_twist_choice(const TwistChoice& c) {
  if (!c.path.empty()) return load_twist(c.path);
  if (!c.xi.empty()) return TwistData::character(io::parse_complex_pair(c.xi));
  return std::nullopt;
}

std::string describe(const TwistData& rho) {
  if (rho.is_character()) return "character xi=" + format_complex(*rho.character_value());
  return "rank " + std::to_string(rho.rank()) + " matrices";
}

double crosscheck_tolerance() {
  const char* env = std::getenv("RUELLE_TOL");
  if (env == nullptr || *env == '\0') return 1e-6;
  const double tol = io::parse_double(env);
  if (!(tol > 0.0)) throw Error(ErrorCode::Parse, "RUELLE_TOL must be a positive number");
  return tol;
}

// z token for CSV rows: plain real part unless z is off the real axis.
std::string z_token(cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

int cmd_alexander(const std::string& pres_path, const TwistChoice& tc, int column, std::ostream& out) {
  auto p = load_presentation(pres_path, {.require_wirtinger = true});
  auto rho = load_twist_choice(tc);
  if (rho) rho->require_cuspidal_character();
  const TwistData twist = rho ? *rho : TwistData::trivial();
  if (rho) twist.check_representation(p);
  auto rep = column >= 0 ? alexander_with_column(p, twist, column) : alexander(p, twist);

  out << "twist: " << (rho ? describe(twist) : std::string("trivial")) << "\n";
  out << "column=" << rep.chosen_column << "\n";
  out << "Delta0=" << rep.delta0.to_string() << "\n";
  out << "Delta1=" << rep.delta1.to_string() << "\n";
  if (rep.kind == ValueAtOne::Pole)
    out << "Delta(1)=pole\n";
  else
    out << "Delta(1)=" << format_complex(*rep.value_at_1) << "\n";
  if (!rho) return kExitOk;
  out << "R0=" << format_double(ruelle_special_value(rep)) << "\n";
  return kExitOk;
}

int cmd_crosscheck(const std::string& pres_path, const TwistChoice& tc, std::ostream& out) {
  auto p = load_presentation(pres_path, {.require_wirtinger = true});
  auto rho = load_twist_choice(tc);
  const TwistData twist = rho ? *rho : TwistData::trivial();
  twist.check_representation(p);
  const double tol = crosscheck_tolerance();

  const double r_alexander = ruelle_special_value(alexander(p, twist));
  const auto rep = torsion_star(complex_from_presentation(p, twist));
  if (!rep.acyclic()) throw Error(ErrorCode::NonAcyclic, "twisted complex at t = 1 has nonzero homology");
  const double r_torsion = std::exp(2.0 * rep.log_tau_star);
  const double rel = std::abs(r_alexander - r_torsion) / std::max(std::abs(r_alexander), 1e-300);
  const bool pass = rel < tol;

  out << "route,R0\n";
  out << "alexander," << format_double(r_alexander) << "\n";
  out << "torsion," << format_double(r_torsion) << "\n";
  out << "relative_difference=" << format_double(rel) << " tolerance=" << format_double(tol) << "\n";
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitTolerance;
}

int cmd_torsion(const std::string& complex_path, const std::string& pres_path, const TwistChoice& tc,
                std::ostream& out) {
  std::optional<ChainComplex> c;
  if (!complex_path.empty()) {
    c = load_chain_complex(complex_path);
  } else if (!pres_path.empty()) {
    auto p = load_presentation(pres_path, {.require_wirtinger = true});
    auto rho = load_twist_choice(tc);
    const TwistData twist = rho ? *rho : TwistData::trivial();
    twist.check_representation(p);
    c = complex_from_presentation(p, twist);
  } else {
    throw Error(ErrorCode::Parse, "torsion needs a chain complex file or --pres");
  }
  const auto rep = torsion_star(*c);
  out << "dims=";
  for (std::size_t p = 0; p < c->dims().size(); ++p) out << (p ? " " : "") << c->dims()[p];
  out << "\nbetti=";
  for (std::size_t p = 0; p < rep.betti.size(); ++p) out << (p ? " " : "") << rep.betti[p];
  out << "\n";
  for (std::size_t p = 0; p < rep.per_degree_logdet.size(); ++p)
    out << "logdet'[" << p << "]=" << format_double(rep.per_degree_logdet[p]) << "\n";
  out << "log_tau_star=" << format_double(rep.log_tau_star) << "\n";
  out << "tau_star=" << format_double(rep.tau_star()) << "\n";
  out << "tau_star^2=" << format_double(std::exp(2.0 * rep.log_tau_star)) << "\n";
  return kExitOk;
}

int cmd_funceq(int n, int r, double vol, double delta, const std::vector<int>& h, std::ostream& out) {
  const auto rep = chi_poly(n, r, vol, delta);
  out << "n=" << n << " r=" << r << " vol=" << format_double(vol) << " delta=" << format_double(delta) << "\n";
  for (int j = 0; j <= n; ++j) {
    out << "gamma[" << j << "]=";
    for (int k = 0; k <= n; ++k) out << (k ? " " : "") << to_string(rep.gamma.gamma[j][k]);
    out << "\n";
  }
  const std::string tag = "r*vol/pi";
  out << "prefactor=" << to_string(rep.prefactor_rational) << "*" << tag << " = " << format_double(rep.prefactor())
      << "\n";
  out << "chi(z)=" << rep.chi.to_string() << "\n";
  out << "X(z)=" << rep.X.to_string() << "\n";
  out << "prefactor*chi(z)=(" << rep.scaled_chi().to_string() << ")*" << tag << "\n";
  out << "prefactor*X(z)=(" << rep.scaled_X().to_string() << ")*" << tag << "\n";
  out << "delta_term=" << 4 * rep.alternating_count() << "*delta*z\n";
  out << "c1=" << format_double(rep.c1) << "\n";
  out << "c1_exact=" << rep.c1_exact.to_string() << "\n";
  if (!h.empty()) out << "order_at_origin=" << order_at_origin(n, h) << "\n";
  return kExitOk;
}

int cmd_epstein(const std::string& path, const std::string& s_str, double radius, std::ostream& out) {
  const auto cusps = load_cusps(path);
  ThetaOptions opts;
  if (radius > 0.0) opts.radius = radius;
  const cplx s = io::parse_complex_pair(s_str);
  out << "s=" << format_complex(s) << " radius=" << format_double(opts.radius) << "\n";
  for (std::size_t c = 0; c < cusps.size(); ++c) {
    const auto& cusp = cusps[c];
    for (std::size_t i = 0; i < cusp.lattices.size(); ++i)
      out << "cusp " << c + 1 << " char " << i + 1 << " zeta=" << format_complex(epstein_value(cusp.lattices[i], s, opts))
          << "\n";
    out << "cusp " << c + 1 << " covolume=" << format_double(cusp.covolume)
        << " tau=" << format_complex(tau_nu(cusp, opts)) << "\n";
  }
  out << "delta=" << format_complex(delta_constant(cusps, opts)) << "\n";
  return kExitOk;
}

int cmd_ruelle(const std::string& path, const std::vector<std::string>& zs, const std::string& path_kind,
               const std::string& format, std::ostream& out) {
  const auto spec = load_spectrum(path);
  const LogRPath kind = path_kind == "direct" ? LogRPath::Direct : LogRPath::Factor;
  if (format == "csv") out << "z,re_logR,im_logR\n";
  for (const auto& zt : zs) {
    const cplx z = io::parse_complex_pair(zt);
    const cplx lr = ruelle_log(spec, z, kind);
    if (format == "csv") {
      out << z_token(z) << "," << format_double(lr.real()) << "," << format_double(lr.imag()) << "\n";
    } else {
      out << "z=" << format_complex(z) << " logR=" << format_complex(lr) << " R=" << format_complex(std::exp(lr))
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_volume(const std::string& shapes_str, std::ostream& out) {
  const auto shapes = parse_shapes(shapes_str);
  const double total = manifold_volume(shapes);
  for (std::size_t i = 0; i < shapes.size(); ++i)
    out << "D[" << i + 1 << "]=" << format_double(tetra_volume(shapes[i]).value) << "\n";
  out << "total=" << format_double(total) << "\n";
  return kExitOk;
}

int cmd_l2torsion(int r, double vol, std::ostream& out) {
  const double l = l2_torsion_log(r, vol);
  out << "log_tau2=" << format_double(l) << " exact=" << to_string(l2_torsion_coefficient(r)) << "*vol/pi\n";
  out << "-18*log_tau2=" << format_double(-18.0 * l) << "\n";
  out << "c1(n=1)=" << format_double(c1(1, r, vol, 0.0)) << " exact=" << c1_exact(1, r).to_string() << "\n";
  return kExitOk;
}

int exit_code(ErrorFamily f) {
  switch (f) {
    case ErrorFamily::Validation:
      return kExitValidation;
    case ErrorFamily::MathDomain:
      return kExitMathDomain;
    case ErrorFamily::Tolerance:
      return kExitTolerance;
  }
  return kExitTolerance;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ruelle L-function invariants: twisted Alexander polynomials, torsion, trace-formula constants"};
  app.require_subcommand(1);

  std::string pres, cx, lattice, spectrum, shapes, s_str = "0,0", path_kind = "factor", format = "text";
  TwistChoice twist;
  int column = -1, n = 1, r = 1;
  double vol = 0.0, delta = 0.0, radius = 0.0;
  std::vector<int> h;
  std::vector<std::string> zs;

  auto* alex = app.add_subcommand("alexander", "twisted Alexander function and R(0, rho)");
  alex->add_option("presentation", pres, "presentation file")->required();
  add_twist_options(alex, twist);
  alex->add_option("--column", column, "force the generator column used for Delta0");

  auto* cross = app.add_subcommand("crosscheck", "Alexander route against torsion route for R(0, rho)");
  cross->add_option("presentation", pres, "presentation file")->required();
  add_twist_options(cross, twist);

  auto* tors = app.add_subcommand("torsion", "Laplacians, Betti numbers and tau*");
  tors->add_option("complex", cx, "chain complex file");
  tors->add_option("--pres", pres, "build the complex from a presentation at t = 1");
  add_twist_options(tors, twist);

  auto* feq = app.add_subcommand("funceq", "chi(z), X(z) and c1 from the trace formula");
  feq->add_option("--n", n, "d = 2n + 1")->required();
  feq->add_option("--r", r, "rank of rho")->required();
  feq->add_option("--vol", vol, "volume")->required();
  feq->add_option("--delta", delta, "cusp constant");
  feq->add_option("--betti", h, "h^1 .. h^n for the order at the origin")->delimiter(',');

  auto* eps = app.add_subcommand("epstein", "Epstein L-values, tau_nu and delta");
  eps->add_option("lattice", lattice, "lattice file")->required();
  eps->add_option("--s", s_str, "s as re,im");
  eps->add_option("--radius", radius, "theta truncation radius");

  auto* rev = app.add_subcommand("ruelle-eval", "truncated log R(z) from a length spectrum");
  rev->add_option("--spectrum", spectrum, "spectrum CSV")->required();
  rev->add_option("--z", zs, "z as re,im (repeatable)")->required();
  rev->add_option("--path", path_kind, "factor or direct")->check(CLI::IsMember({"factor", "direct"}));
  rev->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* volc = app.add_subcommand("volume", "ideal tetrahedron volumes from shapes");
  volc->add_option("--shapes", shapes, "re,im;re,im;...")->required();

  auto* l2 = app.add_subcommand("l2torsion", "L2 torsion constant and its c1 relation");
  l2->add_option("--r", r, "rank")->required();
  l2->add_option("--vol", vol, "volume")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*alex) return cmd_alexander(pres, twist, column, out);
    if (*cross) return cmd_crosscheck(pres, twist, out);
    if (*tors) return cmd_torsion(cx, pres, twist, out);
    if (*feq) return cmd_funceq(n, r, vol, delta, h, out);
    if (*eps) return cmd_epstein(lattice, s_str, radius, out);
    if (*rev) return cmd_ruelle(spectrum, zs, path_kind, format, out);
    if (*volc) return cmd_volume(shapes, out);
    if (*l2) return cmd_l2torsion(r, vol, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.family());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitTolerance;
  }
  return kExitValidation;
}

}  // namespace ruelle::cli
