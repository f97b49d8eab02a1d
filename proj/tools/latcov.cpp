#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "latcov/domain_io.hpp"
#include "latcov/reports.hpp"
#include "latcov/svg.hpp"

namespace {

using latcov::Domain;
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw latcov::ValidationError("ParseError", "cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Critical covering lattices of origin-symmetric planar convex domains.\n"
      "Domains are JSON files (see README) or shorthand strings: disk:R,\n"
      "ellipse:A:B:PHI, ngon:N:R, par:UX:UY:VX:VY, square:SIDE. Angles in all\n"
      "machine-readable output are radians; degrees appear only in this help."};
  app.require_subcommand(1);

  std::string input, out_path;
  int n = 360;
  double tol = 1e-6;
  int resolution = 128;
  std::vector<double> basis;
  double s_value = 0.0;
  std::string domain_out;
  int triangles = 0;
  bool lattice_translates = false;

  CLI::App* analyze = app.add_subcommand("analyze", "area, Delta, verdict and Sas ratio as JSON");
  analyze->add_option("input", input, "domain file or shorthand")->required();
  analyze->add_option("--n", n, "profile grid size (default 360)");
  analyze->add_option("--tol", tol, "relative spread tolerance (default 1e-6)");
  analyze->add_option("-o,--out", out_path, "output path (default stdout)");

  CLI::App* profile = app.add_subcommand("profile", "CSV theta_rad,area profile");
  profile->add_option("input", input, "domain file or shorthand")->required();
  profile->add_option("--n", n, "grid size over [0, pi) (default 360)");
  profile->add_option("-o,--out", out_path, "output path (default stdout)");

  CLI::App* lattice = app.add_subcommand("lattice", "critical covering lattice as JSON");
  lattice->add_option("input", input, "domain file or shorthand")->required();
  lattice->add_option("-o,--out", out_path, "output path (default stdout)");

  CLI::App* cover = app.add_subcommand("cover-check", "covering report as JSON");
  cover->add_option("input", input, "domain file or shorthand")->required();
  cover->add_option("--resolution", resolution, "samples per cell edge (default 128)");
  cover->add_option("--basis", basis, "override lattice basis: b1x b1y b2x b2y")
      ->expected(4);
  cover->add_option("-o,--out", out_path, "output path (default stdout)");

  CLI::App* family = app.add_subcommand("family", "solve the disk-to-square family");
  family->add_option("--s", s_value, "log semi-axis parameter")->required();
  family->add_option("--domain-out", domain_out, "also write the domain file here");
  family->add_option("-o,--out", out_path, "output path (default stdout)");

  CLI::App* render = app.add_subcommand("render", "SVG rendering");
  render->add_option("input", input, "domain file or shorthand")->required();
  render->add_option("--triangles", triangles, "draw up to k critical triangles");
  render->add_flag("--lattice", lattice_translates, "draw critical-lattice translates");
  render->add_option("-o,--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (*analyze) {
      emit(latcov::analyze_report(latcov::load_domain(input), n, tol).dump(2) + "\n", out_path);
    } else if (*profile) {
      Domain k = latcov::load_domain(input);
      emit(latcov::profile_csv(latcov::area_profile(k, n)), out_path);
    } else if (*lattice) {
      Domain k = latcov::load_domain(input);
      latcov::Lattice l = latcov::critical_lattice(k);
      emit(latcov::lattice_report(k, l).dump(2) + "\n", out_path);
    } else if (*cover) {
      Domain k = latcov::load_domain(input);
      latcov::Lattice l = basis.empty()
                              ? latcov::critical_lattice(k)
                              : latcov::Lattice({basis[0], basis[1]}, {basis[2], basis[3]});
      emit(latcov::covering_report_json(latcov::covering_check(k, l, resolution)).dump(2) + "\n",
           out_path);
    } else if (*family) {
      latcov::FamilyParams p = latcov::solve_family(s_value);
      emit(latcov::family_params_json(p).dump(2) + "\n", out_path);
      if (!domain_out.empty())
        emit(latcov::domain_to_json(latcov::build_family_domain(p)).dump(2) + "\n", domain_out);
    } else if (*render) {
      latcov::RenderOptions opt;
      opt.triangles = triangles;
      opt.lattice = lattice_translates;
      emit(latcov::render_svg(latcov::load_domain(input), opt), out_path);
    }
  } catch (const latcov::SolveError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const latcov::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return e.invariant() == "ParseError" ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
