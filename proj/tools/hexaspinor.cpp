// Command-line front door: table emission, verification suites, transforms,
// and batch pipelines over JSON files.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <hexaspinor/bivgeo.hpp>
#include <hexaspinor/cover.hpp>
#include <hexaspinor/curvature.hpp>
#include <hexaspinor/json_io.hpp>
#include <hexaspinor/norden.hpp>
#include <hexaspinor/octo.hpp>
#include <hexaspinor/realforms.hpp>
#include <hexaspinor/report.hpp>

namespace hs = hexaspinor;
using nlohmann::json;

namespace {

struct Options {
  std::string in_path, out_path;
  double tol = 1e-10;
  std::uint64_t seed = 2024;
  std::string sig = "2,4";
};

void write_out(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f) throw hs::input_error("cannot open output file " + opt.out_path);
  f << text;
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw hs::input_error("cannot open input file " + path);
  try {
    json j;
    f >> j;
    return j;
  } catch (const json::exception& e) {
    throw hs::input_error(std::string("malformed JSON: ") + e.what());
  }
}

std::pair<int, int> parse_sig(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw hs::input_error("--sig must be of the form p,q");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (...) {
    throw hs::input_error("--sig must be of the form p,q");
  }
}

hs::Mat4 mat4_from_json(const json& j) {
  const hs::MatX m = hs::matrix_from_json(j, 4, 4);
  return m;
}

json report_tail(const hs::Report& rep) {
  json j;
  j["pass"] = rep.pass();
  return j;
}

int emit_tables(const Options& opt, const std::string& set) {
  const hs::NordenSet n = hs::build_norden_special();
  json out;
  if (set == "norden6") {
    json up = json::array(), dn = json::array();
    for (int al = 0; al < 6; ++al) {
      up.push_back(hs::matrix_to_json(n.eta_up[al]));
      dn.push_back(hs::matrix_to_json(n.eta_dn[al]));
    }
    out["eta_up"] = up;
    out["eta_down"] = dn;
    out["g"] = hs::matrix_to_json(n.metric_g);
    out["eps"] = hs::tensor_to_json(n.eps4.lower());
  } else if (set == "eta8") {
    const hs::EtaSet8 e8 = hs::build_eta8();
    json eta = json::array();
    for (int a = 0; a < 8; ++a) eta.push_back(hs::matrix_to_json(e8.eta[a]));
    out["eta"] = eta;
    out["G"] = hs::matrix_to_json(e8.metric_g);
    out["eps_KL"] = hs::matrix_to_json(e8.eps_kl);
    out["S"] = hs::matrix_to_json(e8.involution);
    out["S_tilde"] = hs::matrix_to_json(e8.s_tilde);
  } else if (set == "realform") {
    const auto [p, q] = parse_sig(opt.sig);
    const hs::RealFormData rf = hs::build_real_form(n, p, q);
    out["signature"] = {p, q};
    out["H"] = hs::matrix_to_json(rf.h);
    out["S"] = hs::matrix_to_json(rf.involution);
    out["s"] = hs::matrix_to_json(rf.s);
    out["s_kind"] = rf.s_kind == hs::SKind::polarity ? "polarity" : "involution";
    out["g_ij"] = hs::matrix_to_json(rf.induced_metric.cast<hs::cd>());
  } else if (set == "octonion") {
    const hs::OctonionTable tab = hs::build_octonion_table(hs::build_eta8());
    json c = json::array();
    for (int i = 0; i < 8; ++i) {
      json row = json::array();
      for (int j2 = 0; j2 < 8; ++j2) {
        json col = json::array();
        for (int k = 0; k < 8; ++k) col.push_back(tab.at(i, j2, k));
        row.push_back(col);
      }
      c.push_back(row);
    }
    out["structure_constants"] = c;
    out["identity"] = hs::vector_to_json(tab.identity);
    out["reading"] = tab.reading;
  } else {
    throw hs::input_error("unknown table set " + set);
  }
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

int run_verify(const Options& opt, const std::string& suite) {
  const hs::NordenSet n = hs::build_norden_special();
  std::vector<hs::Report> reports;
  auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
  if (want("norden")) reports.push_back(hs::identity_suite(n, opt.seed));
  if (want("cover")) reports.push_back(hs::cover_suite(n, opt.seed));
  if (want("realform")) reports.push_back(hs::realform_suite(n, opt.seed));
  if (want("curvature")) reports.push_back(hs::curvature_suite(n, opt.seed));
  if (want("bivgeo")) reports.push_back(hs::bivgeo_suite(n, opt.seed));
  if (want("octo")) reports.push_back(hs::octo_suite(n, opt.seed));
  if (reports.empty()) throw hs::input_error("unknown suite " + suite);
  std::string text;
  bool pass = true;
  for (const hs::Report& r : reports) {
    text += hs::to_json_lines(r);
    pass = pass && r.pass();
  }
  write_out(opt, text);
  return pass ? 0 : 1;
}

int run_push(const Options& opt) {
  const hs::NordenSet n = hs::build_norden_special();
  const json j = read_json(opt.in_path);
  const hs::Mat4 s = mat4_from_json(j.contains("S") ? j.at("S") : j);
  const hs::Mat6 k = hs::push(n, s, opt.tol);
  json out;
  out["K"] = hs::matrix_to_json(k);
  out["residual"] = hs::format_double(hs::orthogonality_residual(n, k));
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

int run_lift(const Options& opt) {
  const hs::NordenSet n = hs::build_norden_special();
  const json j = read_json(opt.in_path);
  const hs::MatX km = hs::matrix_from_json(j.contains("K") ? j.at("K") : j, 6, 6);
  const hs::LiftResult lr = hs::lift(n, hs::Mat6(km), opt.tol > 1e-8 ? opt.tol : 1e-8);
  json out;
  out["S"] = hs::matrix_to_json(lr.s);
  out["residual"] = hs::format_double(lr.residual);
  out["nullspace_dim"] = lr.nullspace_dim;
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

int run_canon(const Options& opt) {
  const hs::NordenSet n = hs::build_norden_special();
  const auto [p, q] = parse_sig(opt.sig);
  const hs::RealFormData rf = hs::build_real_form(n, p, q);
  const json j = read_json(opt.in_path);
  const hs::Mat4 r = mat4_from_json(j.contains("R") ? j.at("R") : j);
  const hs::CanonicalForm cf = hs::canonical_form(n, rf, r);
  json out;
  json lam = json::array();
  for (const hs::cd& l : cf.lambda) lam.push_back({l.real(), l.imag()});
  out["lambda"] = lam;
  out["R16"] = {cf.r16.real(), cf.r16.imag()};
  out["R23"] = {cf.r23.real(), cf.r23.imag()};
  out["R45"] = {cf.r45.real(), cf.r45.imag()};
  out["U"] = hs::matrix_to_json(cf.u);
  hs::cd sum = 0;
  for (const hs::cd& l : cf.lambda) sum += l;
  out["residual"] = hs::format_double(std::abs(sum));
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

int run_nullpair(const Options& opt) {
  const json j = read_json(opt.in_path);
  const hs::Mat4 p = mat4_from_json(j.contains("p") ? j.at("p") : j);
  const hs::NullPair np = hs::extract_null_pair(p);
  json out;
  out["X"] = hs::vector_to_json(np.x);
  out["Y"] = hs::vector_to_json(np.y);
  out["residual"] = hs::format_double(np.residual);
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

int run_flag(const Options& opt) {
  const hs::NordenSet n = hs::build_norden_special();
  const hs::RealFormData rf = hs::build_real_form(n, 2, 4);
  const json j = read_json(opt.in_path);
  auto getv = [&](const char* k) { return hs::Vec4(hs::vector_from_json(j.at(k), 4)); };
  if (!j.contains("X") || !j.contains("Y") || !j.contains("Z") || !j.contains("T"))
    throw hs::input_error("flag basis JSON needs X, Y, Z, T");
  const hs::Flag f = hs::build_flag(n, rf, getv("X"), getv("Y"), getv("Z"), getv("T"));
  json out;
  out["K"] = hs::vector_to_json(f.k);
  out["N"] = hs::vector_to_json(f.n);
  out["L"] = hs::vector_to_json(f.l);
  out["M"] = hs::vector_to_json(f.m);
  out["extension"] = hs::format_double(f.extension);
  out["extension_type"] = f.extension_type == hs::Flag::Type::first ? "first" : "second";
  auto dot6 = [&](const hs::Vec6& a, const hs::Vec6& b) {
    return (a.transpose() * n.metric_g * b)(0);
  };
  double r369 = std::abs(dot6(f.k, f.k));
  r369 = std::max(r369, std::abs(dot6(f.n, f.n)));
  r369 = std::max(r369, std::abs(dot6(f.k, f.n)));
  r369 = std::max(r369, std::abs(dot6(f.l, f.l) + hs::cd(2)));
  r369 = std::max(r369, std::abs(dot6(f.m, f.m) + hs::cd(2)));
  out["residual"] = hs::format_double(r369);
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

int run_quadric(const Options& opt, const std::string& mode) {
  const json j = read_json(opt.in_path);
  json out;
  if (mode == "point2gen") {
    const hs::Vec4 xd = hs::vector_from_json(j.at("Xdot"), 4);
    const hs::Vec4 yd = hs::vector_from_json(j.at("Ydot"), 4);
    const hs::GeneratorSolution gs = hs::solve_point_to_generator(xd, yd, opt.tol);
    out["r_particular"] = hs::matrix_to_json(gs.r_particular);
    json hb = json::array();
    for (const auto& h : gs.homogeneous_basis) hb.push_back(hs::matrix_to_json(h));
    out["homogeneous_basis"] = hb;
    out["rank"] = gs.rank;
    out["residual"] = hs::format_double(gs.residual);
  } else if (mode == "gen2point") {
    std::array<hs::TwistorPoint, 4> pairs;
    const json& arr = j.at("pairs");
    if (!arr.is_array() || arr.size() != 4)
      throw hs::input_error("gen2point needs 4 (X, Y) pairs");
    for (int i = 0; i < 4; ++i) {
      pairs[i].x = hs::vector_from_json(arr[i].at("X"), 4);
      pairs[i].y = hs::vector_from_json(arr[i].at("Y"), 4);
    }
    const hs::PointSolution ps = hs::solve_generator_to_point(pairs);
    out["r"] = hs::matrix_to_json(ps.r);
    out["rank"] = ps.rank;
    out["residual"] = hs::format_double(ps.residual);
  } else if (mode == "family") {
    const hs::EtaSet8 e8 = hs::build_eta8();
    std::array<hs::Twistor2Vector, 4> gen;
    const json& arr = j.at("generator");
    if (!arr.is_array() || arr.size() != 4)
      throw hs::input_error("family needs 4 twistor 8-vectors");
    for (int i = 0; i < 4; ++i) gen[i].v = hs::vector_from_json(arr[i], 8);
    out["rho"] = hs::family_test(e8, gen);
  } else {
    throw hs::input_error("unknown quadric mode " + mode);
  }
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

int run_octonion(const Options& opt, bool table, const std::string& xpath,
                 const std::string& ypath) {
  const hs::OctonionTable tab = hs::build_octonion_table(hs::build_eta8());
  json out;
  if (table) {
    Options o2 = opt;
    return emit_tables(o2, "octonion");
  }
  const hs::Vec8 x = hs::vector_from_json(read_json(xpath), 8);
  const hs::Vec8 y = hs::vector_from_json(read_json(ypath), 8);
  const hs::Vec8 xy = tab.multiply(x, y);
  out["product"] = hs::vector_to_json(xy);
  const hs::cd nx = (x.transpose() * x)(0), ny = (y.transpose() * y)(0),
               nxy = (xy.transpose() * xy)(0);
  out["residual"] = hs::format_double(std::abs(nxy - nx * ny));
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

int run_curvature(const Options& opt, int terms) {
  const hs::NordenSet n = hs::build_norden_special();
  const hs::AlgCurvature6 r6 = hs::random_alg_curvature(opt.seed, terms);
  const hs::CurvatureSpinTensor rs = hs::tensor_to_spintensor(n, r6);
  const hs::CurvatureDecomposition dec = hs::decompose(n, rs);
  json out;
  out["seed"] = opt.seed;
  out["terms"] = terms;
  out["scalar"] = {dec.scalar.real(), dec.scalar.imag()};
  out["weyl_norm"] = hs::format_double(dec.weyl.max_abs());
  out["ricci_part_norm"] = hs::format_double(dec.ricci_part.max_abs());
  out["bianchi_residual"] = hs::format_double(hs::bianchi_residual(rs));
  out["roundtrip_residual"] = hs::format_double(
      (hs::spintensor_to_tensor(n, rs) - r6).max_abs() / r6.max_abs());
  out["recompose_residual"] =
      hs::format_double((hs::recompose(dec) - rs).max_abs() / rs.max_abs());
  write_out(opt, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"six-dimensional spinor formalism toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("HEXASPINOR_TOL")) opt.tol = std::atof(env);

  std::string set_name = "norden6", suite = "all", quadric_mode;
  bool oct_table = false;
  int terms = 2;

  auto add_common = [&](CLI::App* cmd, bool needs_in) {
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
    cmd->add_option("--tol", opt.tol, "tolerance override");
    cmd->add_option("--seed", opt.seed, "seed for randomized pieces");
    cmd->add_option("--sig", opt.sig, "signature p,q");
    auto* in = cmd->add_option("--in", opt.in_path, "input JSON path");
    if (needs_in) in->required();
  };

  CLI::App* tables = app.add_subcommand("tables", "emit operator tables as JSON");
  tables->add_option("--set", set_name, "norden6|eta8|realform|octonion")->required();
  add_common(tables, false);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "norden|cover|realform|curvature|bivgeo|octo|all");
  add_common(verify, false);

  CLI::App* pushc = app.add_subcommand("push", "spin transform to orthogonal transform");
  add_common(pushc, true);
  CLI::App* liftc = app.add_subcommand("lift", "orthogonal transform to spin transform");
  add_common(liftc, true);
  CLI::App* canon = app.add_subcommand("canon", "canonical form of a real bivector");
  add_common(canon, true);
  CLI::App* nullp = app.add_subcommand("nullpair", "null pair of a simple isotropic image");
  add_common(nullp, true);
  CLI::App* flagc = app.add_subcommand("flag", "twistor flag from a spinor basis");
  add_common(flagc, true);

  CLI::App* quad = app.add_subcommand("quadric", "quadric correspondences");
  quad->add_option("mode", quadric_mode, "point2gen|gen2point|family")->required();
  add_common(quad, true);

  CLI::App* oct = app.add_subcommand("octonion", "octonion structure constants");
  oct->add_flag("--table", oct_table, "emit the multiplication table");
  std::vector<std::string> mul_paths;
  oct->add_option("--mul", mul_paths, "x.json y.json factor paths")->expected(2);
  add_common(oct, false);

  CLI::App* curv = app.add_subcommand("curvature", "decomposition diagnostics");
  curv->add_option("--terms", terms, "number of Kulkarni-Nomizu terms");
  add_common(curv, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (tables->parsed()) return emit_tables(opt, set_name);
    if (verify->parsed()) return run_verify(opt, suite);
    if (pushc->parsed()) return run_push(opt);
    if (liftc->parsed()) return run_lift(opt);
    if (canon->parsed()) return run_canon(opt);
    if (nullp->parsed()) return run_nullpair(opt);
    if (flagc->parsed()) return run_flag(opt);
    if (quad->parsed()) return run_quadric(opt, quadric_mode);
    if (oct->parsed()) {
      if (!oct_table && mul_paths.size() != 2)
        throw hs::input_error("octonion needs --table or --mul x.json y.json");
      return run_octonion(opt, oct_table, oct_table ? "" : mul_paths[0],
                          oct_table ? "" : mul_paths[1]);
    }
    if (curv->parsed()) return run_curvature(opt, terms);
  } catch (const hs::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hs::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
