// Command-line front end: JSON in/out for the hexagon, deformation, and
// surface solvers, plus deterministic SVG rendering.
//
// Exit codes: 0 success/pass, 1 malformed input (CLI or JSON schema),
// 2 domain/degenerate/convergence/chart errors, 3 verification failure.
// Machine-readable error JSON goes to stdout, the message to stderr.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hexstretch/deform.hpp"
#include "hexstretch/embedding.hpp"
#include "hexstretch/hexagon.hpp"
#include "hexstretch/json_io.hpp"
#include "hexstretch/surface.hpp"
#include "hexstretch/svg_render.hpp"

namespace {

using hexstretch::Json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw hexstretch::SchemaError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw hexstretch::SchemaError("cannot open output file: " + path);
  f << text;
}

void emit_json(const std::string& path, const Json& j) {
  write_output(path, hexstretch::dump_json17(j) + "\n");
}

hexstretch::HexagonShape load_hexagon(const std::string& path) {
  return hexstretch::hexagon_from_json(hexstretch::parse_json(read_input(path)));
}

hexstretch::TriangulatedSurface load_surface(const std::string& path) {
  return hexstretch::surface_from_json(hexstretch::parse_json(read_input(path)));
}

hexstretch::FoliationCoord coord_from_flag(const std::vector<double>& v) {
  if (v.size() != 3)
    throw hexstretch::SchemaError("--coord needs exactly three values: sector,u,v");
  const int sector = static_cast<int>(v[0]);
  if (sector != v[0]) throw hexstretch::SchemaError("--coord sector must be an integer");
  return {sector, v[1], v[2]};
}

hexstretch::DiscPoint point_from_flag(const std::vector<double>& v) {
  if (v.size() != 2) throw hexstretch::SchemaError("--point needs exactly two values: x,y");
  return {v[0], v[1]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"right-angled hexagon deformations and bordered-surface certificates"};
  app.require_subcommand(1);
  int verification_exit = 0;

  std::string in_path = "-", out_path = "-";
  app.add_option("--in", in_path, "input JSON file, - for stdin")->capture_default_str();
  app.add_option("--out", out_path, "output file, - for stdout")->capture_default_str();
  app.fallthrough();

  auto point_json = [](const hexstretch::DiscPoint& p) {
    return Json::array({p.x(), p.y()});
  };

  // hexagon solve|classify|coords
  auto* hexcmd = app.add_subcommand("hexagon", "solve, classify, or chart a hexagon");
  hexcmd->require_subcommand(1);
  hexcmd->fallthrough();

  hexcmd->add_subcommand("solve", "solve a hexagon and report its full shape")
      ->callback([&] { emit_json(out_path, hexstretch::hexagon_report_json(load_hexagon(in_path))); });

  hexcmd->add_subcommand("classify", "report the hexagon type")->callback([&] {
    const Json j = hexstretch::parse_json(read_input(in_path));
    hexstretch::HexType t;
    if (j.is_object() && j.contains("lambda") && !j.contains("half_long") && !j.contains("alphas")) {
      const auto lam = hexstretch::detail::require_triple(j["lambda"], "lambda");
      t = hexstretch::classify_short_edges(lam);
    } else {
      t = hexstretch::hexagon_from_json(j).type;
    }
    emit_json(out_path, Json{{"type", hexstretch::to_string(t)}});
  });

  std::vector<double> coord_flag, point_flag;
  auto* coords = hexcmd->add_subcommand("coords", "convert between chart coordinates and points");
  coords->add_option("--coord", coord_flag, "sector,u,v")->delimiter(',');
  coords->add_option("--point", point_flag, "x,y")->delimiter(',');
  coords->callback([&] {
    const hexstretch::EmbeddedHexagon hx(load_hexagon(in_path));
    if (coord_flag.empty() == point_flag.empty())
      throw hexstretch::SchemaError("coords: give exactly one of --coord or --point");
    Json out;
    if (!coord_flag.empty()) {
      const auto c = coord_from_flag(coord_flag);
      out["coord"] = hexstretch::coord_to_json(c);
      out["point"] = point_json(hx.coord_to_point(c));
    } else {
      const auto p = point_from_flag(point_flag);
      out["point"] = point_json(p);
      out["coord"] = hexstretch::coord_to_json(hx.point_to_coord(p));
    }
    emit_json(out_path, out);
  });

  // deform
  double K = 1.0;
  auto* deformcmd = app.add_subcommand("deform", "deform a hexagon, report stretch ratios");
  deformcmd->add_option("--K", K, "deformation parameter")->required();
  deformcmd->callback([&] {
    const hexstretch::DeformationFamily fam(load_hexagon(in_path), K);
    Json out;
    out["K"] = fam.K();
    out["k"] = fam.k();
    out["k_i"] = fam.edge_ratios();
    out["argmax_edge"] = fam.argmax_edge();
    out["base"] = hexstretch::hexagon_to_json(fam.base());
    out["deformed"] = hexstretch::hexagon_to_json(fam.deformed());
    emit_json(out_path, out);
  });

  // map-point
  double map_K = 1.0;
  std::vector<double> map_coord, map_pt;
  auto* mapcmd = app.add_subcommand("map-point", "apply the extremal map to a point");
  mapcmd->add_option("--K", map_K, "deformation parameter")->required();
  mapcmd->add_option("--coord", map_coord, "sector,u,v in the base chart")->delimiter(',');
  mapcmd->add_option("--point", map_pt, "x,y in the base embedding")->delimiter(',');
  mapcmd->callback([&] {
    const hexstretch::DeformationFamily fam(load_hexagon(in_path), map_K);
    if (map_coord.empty() == map_pt.empty())
      throw hexstretch::SchemaError("map-point: give exactly one of --coord or --point");
    hexstretch::FoliationCoord c{1, 0.0, 0.0};
    hexstretch::DiscPoint p = hexstretch::DiscPoint::origin();
    if (!map_coord.empty()) {
      c = coord_from_flag(map_coord);
      p = fam.base_embedding().coord_to_point(c);
    } else {
      p = point_from_flag(map_pt);
      c = fam.base_embedding().point_to_coord(p);
    }
    const hexstretch::DiscPoint image = fam.map_coord(c);
    Json out;
    out["coord"] = hexstretch::coord_to_json(c);
    out["point"] = point_json(p);
    out["image"] = point_json(image);
    emit_json(out_path, out);
  });

  // verify lipschitz
  double ver_K = 1.0, fd_step = 1e-5, tol_fd = 1e-4;
  int grid_n = 24;
  auto* verify = app.add_subcommand("verify", "numerical verification suites");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* lip = verify->add_subcommand("lipschitz", "grid-check the extremal Lipschitz bound");
  lip->add_option("--K", ver_K, "deformation parameter")->required();
  lip->add_option("--grid", grid_n, "grid resolution per sector")->capture_default_str();
  lip->add_option("--fd-step", fd_step, "finite-difference step")->capture_default_str();
  lip->add_option("--tol-fd", tol_fd, "relative slack on the bound")->capture_default_str();
  lip->callback([&] {
    const hexstretch::DeformationFamily fam(load_hexagon(in_path), ver_K);
    const auto rep = hexstretch::verify_lipschitz(fam, grid_n, fd_step, tol_fd);
    emit_json(out_path, hexstretch::stretch_report_to_json(rep));
    if (!rep.pass) verification_exit = 3;
  });

  // surface validate|boundaries|deform|certificate|luo
  auto* surf = app.add_subcommand("surface", "glued-surface operations");
  surf->require_subcommand(1);
  surf->fallthrough();

  double tol_length = 1e-9;
  auto* sval = surf->add_subcommand("validate", "check gluing invariants");
  sval->add_option("--tol-length", tol_length, "glued-length mismatch tolerance")
      ->capture_default_str();
  sval->callback([&] {
    const auto v = hexstretch::validate(load_surface(in_path), tol_length);
    emit_json(out_path, hexstretch::violations_to_json(v));
    if (!v.empty()) verification_exit = 3;
  });

  surf->add_subcommand("boundaries", "trace boundary cycles")->callback([&] {
    emit_json(out_path,
              hexstretch::boundary_report_to_json(hexstretch::boundary_cycles(load_surface(in_path))));
  });

  double surf_K = 1.0;
  auto* sdef = surf->add_subcommand("deform", "deform every hexagon");
  sdef->add_option("--K", surf_K, "deformation parameter")->required();
  sdef->callback([&] {
    emit_json(out_path,
              hexstretch::surface_to_json(hexstretch::deform_surface(load_surface(in_path), surf_K)));
  });

  double K1 = 1.0, K2 = 1.0, tol_gap = 1e-10;
  auto* cert = surf->add_subcommand("certificate", "arc/Lipschitz geodesic certificate");
  cert->add_option("--K1", K1, "start parameter")->required();
  cert->add_option("--K2", K2, "end parameter")->required();
  cert->add_option("--tol-gap", tol_gap, "geodesic-grade gap threshold")->capture_default_str();
  cert->callback([&] {
    auto c = hexstretch::arc_certificate(load_surface(in_path), K1, K2);
    c.geodesic_grade = std::abs(c.gap) <= tol_gap;
    emit_json(out_path, hexstretch::certificate_to_json(c));
    if (!c.geodesic_grade) verification_exit = 3;
  });

  surf->add_subcommand("luo", "radius coordinates of glued edges and boundary cycle sums")
      ->callback([&] {
        const auto s = load_surface(in_path);
        Json out;
        out["edges"] = Json::array();
        for (const hexstretch::Gluing& g : s.gluings())
          out["edges"].push_back(Json{{"a", Json::array({g.a.hexagon, g.a.edge})},
                                      {"b", Json::array({g.b.hexagon, g.b.edge})},
                                      {"z", hexstretch::luo_radius(s, g.a)}});
        out["boundary_cycle_sums"] = Json::array();
        const auto rep = hexstretch::boundary_cycles(s);
        for (const auto& cyc : rep.cycles) {
          const auto ec = hexstretch::corner_crossing_cycle(s, cyc);
          Json cj;
          cj["edges"] = Json::array();
          for (const auto& e : ec) cj["edges"].push_back(Json::array({e.hexagon, e.edge}));
          cj["sum"] = hexstretch::cycle_sum(s, ec);
          cj["boundary_length"] = cyc.length;
          out["boundary_cycle_sums"].push_back(cj);
        }
        emit_json(out_path, out);
      });

  // render
  hexstretch::RenderSpec rspec;
  double overlay_K = 0.0;
  auto* render = app.add_subcommand("render", "deterministic SVG of an embedded hexagon");
  render->add_option("--width", rspec.width_px, "image width in pixels")->capture_default_str();
  render->add_option("--leaves-f", rspec.leaf_count_f, "hypercycle leaves per sector")
      ->capture_default_str();
  render->add_option("--leaves-g", rspec.leaf_count_g, "transverse leaves per sector")
      ->capture_default_str();
  render->add_flag("--show-foliation-f", rspec.show_foliation_f, "draw the hypercycle foliation");
  render->add_flag("--show-foliation-g", rspec.show_foliation_g, "draw the transverse foliation");
  render->add_flag("--show-tripod", rspec.show_tripod, "draw the central tripod");
  render->add_flag("--show-central-region", rspec.show_central_region, "shade the central region");
  render->add_flag("--show-labels", rspec.show_labels, "draw labels");
  auto* okopt = render->add_option("--overlay-K", overlay_K, "overlay the K-deformed hexagon");
  render->callback([&] {
    if (*okopt) rspec.overlay_K = overlay_K;
    write_output(out_path, hexstretch::render_svg(load_hexagon(in_path), rspec));
  });

  auto fail = [&](const char* kind, const std::string& msg, int code) {
    std::cout << hexstretch::dump_json17(
                     Json{{"error", Json{{"kind", kind}, {"message", msg}}}})
              << "\n";
    std::cerr << "error: " << msg << "\n";
    return code;
  };

  // Let --in/--out and shared flags be written after the subcommand path.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) enable_fallthrough(s);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    return fail("schema", e.what(), 1);
  } catch (const hexstretch::SchemaError& e) {
    return fail("schema", e.what(), 1);
  } catch (const hexstretch::IdealLimitError& e) {
    return fail("ideal_limit", e.what(), 2);
  } catch (const hexstretch::DegenerateError& e) {
    return fail("degenerate", e.what(), 2);
  } catch (const hexstretch::ConvergenceError& e) {
    return fail("convergence", e.what(), 2);
  } catch (const hexstretch::OutOfChartError& e) {
    return fail("out_of_chart", e.what(), 2);
  } catch (const hexstretch::OutsideHexagonError& e) {
    return fail("outside_hexagon", e.what(), 2);
  } catch (const hexstretch::DomainError& e) {
    return fail("domain", e.what(), 2);
  } catch (const hexstretch::Error& e) {
    return fail("domain", e.what(), 2);
  }
  return verification_exit;
}
