#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "shuffle/charfunc.hpp"
#include "shuffle/dyck_algebra.hpp"
#include "shuffle/json_io.hpp"
#include "shuffle/macdonald.hpp"
#include "shuffle/verify.hpp"

namespace {

using namespace shuffle;

struct Options {
  std::string format = "json";
  int jobs = 1;
  std::string cache_dir;
};

void emit_json(const Json& j) { std::cout << j.dump(1) << "\n"; }

SymFunc read_symfunc(const std::string& input) {
  Json j;
  if (input == "-") {
    j = Json::parse(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open input file " + input);
    j = Json::parse(in);
  }
  return symfunc_from_json(j);
}

std::string symfunc_text(const SymFunc& f) {
  return convert(f, Basis::s).str();
}

int run_verify(const std::string& name, const std::string& rel_suite, int n, int k, int deg,
               const Options& opt) {
  std::vector<VerificationReport> reports;
  if (name == "all") {
    reports = verify_all(n, k, deg, opt.jobs);
  } else if (name == "zeta") {
    reports.push_back(verify_zeta(n, opt.jobs));
  } else if (name == "dpthm") {
    reports.push_back(verify_dpthm(n, std::min(n, 5), opt.jobs));
  } else if (name == "recs") {
    reports.push_back(verify_recs(std::min(deg, 4), k));
  } else if (name == "relations") {
    reports.push_back(verify_relations(rel_suite, k, deg));
  } else if (name == "involution") {
    reports.push_back(verify_involution(n, k, deg));
  } else if (name == "appendix") {
    reports.push_back(verify_appendix(n, opt.jobs));
  } else if (name == "macdonald") {
    reports.push_back(verify_macdonald(n));
  } else if (name == "shuffle") {
    reports.push_back(verify_shuffle(n, opt.jobs));
  } else {
    // direct relation-family names are accepted too
    reports.push_back(verify_relations(name, k, deg));
  }
  bool ok = true;
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) {
      arr.push_back(r.to_json());
      ok = ok && r.all_pass();
    }
    emit_json(reports.size() == 1 ? arr[0] : arr);
  } else {
    for (const auto& r : reports) {
      std::cout << r.text();
      ok = ok && r.all_pass();
    }
    std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations around the compositional shuffle theorem"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "parallel workers for independent instances")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", opt.cache_dir,
                 "cache directory (fallback: SHUFFLE_CACHE_DIR)");

  std::string path_arg, weight = "1", input_arg = "-", method = "both";
  std::vector<int> alpha_arg, mu_arg;
  int n_arg = 5, k_arg = 2, deg_arg = 4;
  std::string verify_name, rel_suite = "dpa";

  auto* stats = app.add_subcommand("stats", "statistics of a Dyck path");
  stats->add_option("--path", path_arg, "NE-word or comma-separated area sequence")->required();

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta image of a Dyck path");
  zeta_cmd->add_option("--path", path_arg, "NE-word or area sequence")->required();

  auto* chi_cmd = app.add_subcommand("chi", "characteristic function of a Dyck path");
  chi_cmd->add_option("--path", path_arg, "NE-word or area sequence");
  chi_cmd->add_option("--weight", weight, "corner weight: 1, 0, or mu")
      ->check(CLI::IsMember({"1", "0", "mu"}));
  chi_cmd->add_option("--mu", mu_arg, "partition for --weight mu")->delimiter(',');

  auto* dalpha_cmd = app.add_subcommand("dalpha", "combinatorial D_alpha");
  dalpha_cmd->add_option("--alpha", alpha_arg, "composition, e.g. 1,2")
      ->delimiter(',')
      ->required();
  dalpha_cmd->add_option("--method", method, "dinv, bounce, or both")
      ->check(CLI::IsMember({"dinv", "bounce", "both"}));

  auto* nalpha_cmd = app.add_subcommand("nalpha", "N_alpha in V_{l(alpha)}");
  nalpha_cmd->add_option("--alpha", alpha_arg, "composition")->delimiter(',')->required();

  auto* mac_cmd = app.add_subcommand("macdonald", "modified Macdonald polynomial H_mu");
  mac_cmd->add_option("--mu", mu_arg, "partition, e.g. 2,1")->delimiter(',')->required();

  auto* nabla_cmd = app.add_subcommand("nabla", "apply nabla to a symmetric function");
  nabla_cmd->add_option("--input", input_arg, "SymFunc JSON file, or - for stdin");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("name", verify_name, "suite: shuffle, zeta, dpthm, recs, relations, involution, appendix, macdonald, all")
      ->required();
  verify_cmd->add_option("--suite", rel_suite, "relation family for 'verify relations'");
  verify_cmd->add_option("--n", n_arg, "size cap");
  verify_cmd->add_option("--k", k_arg, "level cap");
  verify_cmd->add_option("--deg", deg_arg, "degree cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e, std::cout, std::cerr);
    return 2;
  }

  try {
    if (!opt.cache_dir.empty()) set_cache_dir(opt.cache_dir);

    if (*stats) {
      DyckPath p = path_from_string(path_arg);
      if (opt.format == "json") emit_json(path_to_json(p));
      else std::cout << path_to_json(p).dump(1) << "\n";
      return 0;
    }
    if (*zeta_cmd) {
      DyckPath p = path_from_string(path_arg);
      DyckPath im = zeta(p);
      Json j;
      j["path"] = p.word();
      j["zeta"] = im.word();
      j["image"] = path_to_json(im);
      Json cells = Json::array();
      for (const auto& [i, jj] : area_set(im)) cells.push_back(Json::array({i, jj}));
      j["image_area_set"] = std::move(cells);
      emit_json(j);
      return 0;
    }
    if (*chi_cmd) {
      SymFunc f;
      if (weight == "mu") {
        if (mu_arg.empty())
          throw CLI::ValidationError("chi", "--weight mu requires --mu");
        Partition mu(mu_arg);
        DyckPath p = pi_mu(mu);
        if (!path_arg.empty() && !(path_from_string(path_arg) == p))
          throw CLI::ValidationError("chi", "--path is not pi_mu for the given --mu");
        f = chi_weighted(p, wt_mu(mu));
      } else {
        if (path_arg.empty()) throw CLI::ValidationError("chi", "--path is required");
        DyckPath p = path_from_string(path_arg);
        f = weight == "0" ? chi_zero(p) : chi(p);
      }
      SymFunc out = convert(f, Basis::s);
      if (opt.format == "json") emit_json(symfunc_to_json(out));
      else std::cout << symfunc_text(out) << "\n";
      return 0;
    }
    if (*dalpha_cmd) {
      Composition alpha(alpha_arg);
      Json j;
      j["alpha"] = composition_to_json(alpha);
      SymFunc val;
      if (method == "dinv") {
        val = d_alpha_dinv(alpha);
      } else if (method == "bounce") {
        val = d_alpha_bounce(alpha);
      } else {
        SymFunc a = d_alpha_dinv(alpha), b = d_alpha_bounce(alpha);
        j["agree"] = a == b;
        val = a;
      }
      j["value"] = symfunc_to_json(convert(val, Basis::s));
      if (opt.format == "json") emit_json(j);
      else std::cout << symfunc_text(val) << "\n";
      return 0;
    }
    if (*nalpha_cmd) {
      VkElement v = n_alpha(Composition(alpha_arg));
      if (opt.format == "json") emit_json(vk_to_json(v));
      else std::cout << v.str() << "\n";
      return 0;
    }
    if (*mac_cmd) {
      SymFunc H = macdonald_H(Partition(mu_arg));
      if (opt.format == "json") emit_json(symfunc_to_json(H));
      else std::cout << symfunc_text(H) << "\n";
      return 0;
    }
    if (*nabla_cmd) {
      SymFunc f = read_symfunc(input_arg);
      SymFunc out = nabla(f);
      if (opt.format == "json") emit_json(symfunc_to_json(out));
      else std::cout << symfunc_text(out) << "\n";
      return 0;
    }
    if (*verify_cmd) return run_verify(verify_name, rel_suite, n_arg, k_arg, deg_arg, opt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
