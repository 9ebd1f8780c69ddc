#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "colortool/error.hpp"
#include "colortool/json_io.hpp"
#include "colortool/numfmt.hpp"
#include "colortool/ops.hpp"
#include "colortool/plots.hpp"
#include "colortool/registry.hpp"
#include "colortool/service.hpp"

namespace colortool::cli {
namespace {

using nlohmann::json;

// Raised for argument combinations CLI11 cannot express.
struct UsageError {
  std::string message;
};

struct PaletteArgs {
  std::string kind;
  std::string name;
  int n = 7;
  std::vector<std::string> overrides;
  bool reverse = false;
  std::string start = "0";
  std::string end = "2/3";
  std::vector<std::string> colors;
};

struct PlotArgs {
  std::string out;
  double width = 0;
  double height = 0;
  std::string title;
};

void add_palette_options(CLI::App* cmd, PaletteArgs& a, bool positional_colors) {
  cmd->add_option("--kind", a.kind, "qualitative, sequential, diverging or rainbow");
  cmd->add_option("--name", a.name, "registry palette name");
  cmd->add_option("-n,--count", a.n, "number of colors")->capture_default_str();
  cmd->add_option("--override", a.overrides, "key=value HCL parameter override (repeatable)");
  cmd->add_flag("--reverse", a.reverse, "reverse the color order");
  cmd->add_option("--start", a.start, "rainbow start hue as a fraction of the circle");
  cmd->add_option("--end", a.end, "rainbow end hue as a fraction of the circle");
  if (positional_colors) {
    cmd->add_option("colors", a.colors, "explicit hex colors instead of a palette");
  }
}

void add_plot_options(CLI::App* cmd, PlotArgs& p) {
  cmd->add_option("--out,-o", p.out, "output SVG file (default: standard output)");
  cmd->add_option("--width", p.width, "canvas width override");
  cmd->add_option("--height", p.height, "canvas height override");
  cmd->add_option("--title", p.title, "figure title");
}

std::string normalize_hex(std::string text) {
  while (!text.empty() && (text.front() == '\'' || text.front() == '"')) text.erase(0, 1);
  while (!text.empty() && (text.back() == '\'' || text.back() == '"')) text.pop_back();
  if (text.empty() || text.front() != '#') text.insert(0, "#");
  return text;
}

std::vector<HexCode> parse_colors(const std::vector<std::string>& texts) {
  std::vector<std::string> normalized;
  for (const auto& t : texts) normalized.push_back(normalize_hex(t));
  return parse_hex_list(normalized);
}

double fraction(const std::string& text, const char* what) {
  const auto v = parse_number(text);
  if (!v) throw UsageError{std::string(what) + " expects a number or fraction, got \"" + text + "\""};
  return *v;
}

const Registry& active_registry() {
  static const std::optional<Registry> from_env = []() -> std::optional<Registry> {
    const char* path = std::getenv("COLORTOOL_REGISTRY");
    if (path == nullptr || *path == '\0') return std::nullopt;
    return Registry::load(path);
  }();
  return from_env ? *from_env : Registry::builtin();
}

SpecOverrides parse_overrides(const std::vector<std::string>& assignments) {
  SpecOverrides o;
  for (const auto& a : assignments) {
    try {
      set_override(o, a);
    } catch (const InvalidInputError& e) {
      throw UsageError{e.what()};
    }
  }
  return o;
}

PaletteSpec resolve_spec(const PaletteArgs& a) {
  const SpecOverrides overrides = parse_overrides(a.overrides);
  PaletteSpec spec;
  if (!a.name.empty()) {
    spec = active_registry().get(a.name, overrides);
    if (!a.kind.empty() && parse_palette_kind(a.kind) != spec.kind) {
      throw InvalidInputError("palette \"" + spec.name + "\" is " +
                              std::string(to_string(spec.kind)) + ", not " + a.kind);
    }
  } else {
    if (a.kind.empty()) {
      throw UsageError{"give --name, --kind with overrides, or explicit colors"};
    }
    if (!overrides.h1 || !overrides.c1 || !overrides.l1) {
      throw UsageError{"a palette without --name needs at least h1, c1 and l1 overrides"};
    }
    spec.kind = parse_palette_kind(a.kind);
    apply_overrides(spec, overrides);
  }
  if (a.reverse) spec.reverse = !spec.reverse;
  return spec;
}

Palette resolve_palette(const PaletteArgs& a) {
  if (a.kind == "rainbow") {
    return rainbow_hsv(a.n, fraction(a.start, "--start"), fraction(a.end, "--end"), a.reverse);
  }
  if (a.name.empty() && a.kind.empty() && !a.colors.empty()) {
    return Palette{"", parse_colors(a.colors)};
  }
  return sample(resolve_spec(a), a.n);
}

void emit_svg(const SvgDocument& doc, const PlotArgs& p, std::ostream& out) {
  if (p.out.empty()) {
    out << doc.text;
    return;
  }
  std::ofstream file(p.out, std::ios::binary);
  if (!file || !(file << doc.text) || !file.flush()) {
    throw Error("cannot write " + p.out);
  }
  out << p.out << '\n';
}

void print_hexes(const std::vector<HexCode>& colors, bool as_json, std::ostream& out) {
  if (as_json) {
    out << hex_array(colors).dump() << '\n';
    return;
  }
  for (const auto& c : colors) out << c.text() << '\n';
}

// --- convert ---------------------------------------------------------------

using Triple = std::array<double, 3>;

const std::vector<std::string> kSpaces = {"hex", "srgb", "linear", "xyz", "luv", "hcl", "hsv"};

Srgb triple_to_srgb(const std::string& space, const Triple& v) {
  if (space == "srgb") return {v[0], v[1], v[2]};
  if (space == "linear") return linear_to_srgb({v[0], v[1], v[2]});
  if (space == "xyz") return linear_to_srgb(xyz_to_linear({v[0], v[1], v[2]}));
  if (space == "luv") return linear_to_srgb(xyz_to_linear(luv_to_xyz({v[0], v[1], v[2]})));
  if (space == "hcl") return hcl_to_srgb({v[0], v[1], v[2]});
  return hsv_to_srgb({v[0], v[1], v[2]});
}

Triple srgb_to_triple(const std::string& space, const Srgb& c) {
  if (space == "srgb") return {c.r, c.g, c.b};
  const LinearRgb lin = srgb_to_linear(c);
  if (space == "linear") return {lin.r, lin.g, lin.b};
  const Xyz xyz = linear_to_xyz(lin);
  if (space == "xyz") return {xyz.x, xyz.y, xyz.z};
  const Luv luv = xyz_to_luv(xyz);
  if (space == "luv") return {luv.l, luv.u, luv.v};
  if (space == "hcl") {
    const Hcl hcl = luv_to_hcl(luv);
    return {hcl.h, hcl.c, hcl.l};
  }
  const Hsv hsv = srgb_to_hsv(c);
  return {hsv.h, hsv.s, hsv.v};
}

int cmd_convert(const std::string& from, const std::string& to,
                const std::vector<std::string>& values, bool as_json, std::ostream& out) {
  std::vector<Srgb> colors;
  if (from == "hex") {
    for (const auto& c : parse_colors(values)) colors.push_back(c.to_srgb());
  } else {
    std::vector<double> numbers;
    for (const auto& token : values) {
      std::size_t start = 0;
      while (start <= token.size()) {
        const auto comma = token.find(',', start);
        const std::string piece = token.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!piece.empty()) {
          const auto v = parse_number(piece);
          if (!v) throw InvalidInputError("not a number: \"" + piece + "\"");
          numbers.push_back(*v);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    if (numbers.empty() || numbers.size() % 3 != 0) {
      throw UsageError{"expected coordinate triples, got " + std::to_string(numbers.size()) +
                       " numbers"};
    }
    for (std::size_t k = 0; k < numbers.size(); k += 3) {
      colors.push_back(triple_to_srgb(from, {numbers[k], numbers[k + 1], numbers[k + 2]}));
    }
  }

  json array = json::array();
  for (const auto& c : colors) {
    if (to == "hex") {
      const std::string hex = format_hex(fixup_gamut(c)).text();
      if (as_json) array.push_back(hex);
      else out << hex << '\n';
      continue;
    }
    const Triple t = srgb_to_triple(to, c);
    if (as_json) {
      array.push_back({t[0], t[1], t[2]});
    } else {
      out << format_fixed(t[0], 4) << ' ' << format_fixed(t[1], 4) << ' ' << format_fixed(t[2], 4)
          << '\n';
    }
  }
  if (as_json) out << array.dump() << '\n';
  return kExitOk;
}

// --- registry --------------------------------------------------------------

int cmd_registry_list(bool as_json, std::ostream& out) {
  const Registry& registry = active_registry();
  if (as_json) {
    json array = json::array();
    for (const auto& spec : registry.entries()) {
      array.push_back({{"name", spec.name},
                       {"kind", std::string(to_string(spec.kind))},
                       {"spec", spec_to_json(spec)}});
    }
    out << array.dump() << '\n';
    return kExitOk;
  }
  for (PaletteKind kind :
       {PaletteKind::qualitative, PaletteKind::sequential, PaletteKind::diverging}) {
    out << to_string(kind) << ":\n";
    for (const auto& spec : registry.entries()) {
      if (spec.kind == kind) out << "  " << spec.name << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"colortool: HCL palettes, color vision checks and diagnostic plots", "colortool"};
  app.require_subcommand(1);
  app.fallthrough(false);

  // palette
  PaletteArgs pal;
  bool pal_json = false;
  auto* palette_cmd = app.add_subcommand("palette", "sample a palette as hex codes");
  add_palette_options(palette_cmd, pal, false);
  palette_cmd->add_flag("--json", pal_json, "print a JSON array");

  // convert
  std::string conv_from = "hex", conv_to = "hcl";
  std::vector<std::string> conv_values;
  bool conv_json = false;
  auto* convert_cmd = app.add_subcommand("convert", "convert colors between spaces");
  convert_cmd->add_option("--from", conv_from)->check(CLI::IsMember(kSpaces))->capture_default_str();
  convert_cmd->add_option("--to", conv_to)->check(CLI::IsMember(kSpaces))->capture_default_str();
  convert_cmd->add_option("values", conv_values, "hex colors or coordinate triples")->required();
  convert_cmd->add_flag("--json", conv_json);

  // simulate
  std::string sim_cvd;
  double sim_severity = 1.0;
  std::optional<double> sim_desaturate, sim_adjust;
  std::vector<std::string> sim_colors;
  bool sim_json = false;
  auto* simulate_cmd = app.add_subcommand("simulate", "simulate deficiencies or manipulate colors");
  simulate_cmd->add_option("--cvd", sim_cvd, "deutan, protan or tritan")
      ->check(CLI::IsMember({"deutan", "protan", "tritan"}));
  simulate_cmd->add_option("--severity", sim_severity, "severity in [0,1]")->capture_default_str();
  simulate_cmd->add_option("--desaturate", sim_desaturate, "remove this fraction of chroma");
  simulate_cmd->add_option("--adjust", sim_adjust, "lighten (> 0) or darken (< 0), in [-1,1]");
  simulate_cmd->add_option("colors", sim_colors)->required();
  simulate_cmd->add_flag("--json", sim_json);

  // assess
  auto* assess_cmd = app.add_subcommand("assess", "contrast and luminance checks");
  assess_cmd->require_subcommand(1);
  std::vector<std::string> contrast_colors, mono_colors;
  bool assess_json = false;
  auto* contrast_cmd = assess_cmd->add_subcommand("contrast", "WCAG contrast ratio of two colors");
  contrast_cmd->add_option("colors", contrast_colors)->required()->expected(2);
  contrast_cmd->add_flag("--json", assess_json);
  auto* mono_cmd = assess_cmd->add_subcommand("monotone-luminance",
                                              "is HCL luminance strictly monotone?");
  mono_cmd->add_option("colors", mono_colors)->required();
  mono_cmd->add_flag("--json", assess_json);

  // figures
  PaletteArgs sw_pal, sp_pal, hp_pal, demo_pal;
  PlotArgs sw_plot, sp_plot, hp_plot, demo_plot;
  std::string sw_label;
  auto* swatch_cmd = app.add_subcommand("swatch", "swatch plot SVG");
  add_palette_options(swatch_cmd, sw_pal, true);
  add_plot_options(swatch_cmd, sw_plot);
  swatch_cmd->add_option("--label", sw_label, "row label");

  auto* spec_cmd = app.add_subcommand("spec", "HCL spectrum plot SVG");
  add_palette_options(spec_cmd, sp_pal, true);
  add_plot_options(spec_cmd, sp_plot);

  auto* hcl_cmd = app.add_subcommand("hclplot", "chroma-luminance path plot SVG");
  add_palette_options(hcl_cmd, hp_pal, false);
  add_plot_options(hcl_cmd, hp_plot);

  std::uint32_t demo_seed = 1;
  std::string demo_cvd;
  double demo_severity = 1.0;
  std::optional<double> demo_desaturate;
  bool demo_compare = false;
  auto* demo_cmd = app.add_subcommand("demo", "heatmap demo SVG");
  add_palette_options(demo_cmd, demo_pal, true);
  add_plot_options(demo_cmd, demo_plot);
  demo_cmd->add_option("--seed", demo_seed)->capture_default_str();
  demo_cmd->add_option("--cvd", demo_cvd)->check(CLI::IsMember({"deutan", "protan", "tritan"}));
  demo_cmd->add_option("--severity", demo_severity)->capture_default_str();
  demo_cmd->add_option("--desaturate", demo_desaturate);
  demo_cmd->add_flag("--compare", demo_compare,
                     "three panels: original, simulated deficiency, desaturated");

  // registry
  auto* registry_cmd = app.add_subcommand("registry", "inspect named palettes");
  registry_cmd->require_subcommand(1);
  bool reg_json = false;
  auto* list_cmd = registry_cmd->add_subcommand("list", "palette names grouped by kind");
  list_cmd->add_flag("--json", reg_json);
  std::string show_name;
  std::vector<std::string> show_overrides;
  auto* show_cmd = registry_cmd->add_subcommand("show", "settings of one palette");
  show_cmd->add_option("name", show_name)->required();
  show_cmd->add_option("--override", show_overrides);
  show_cmd->add_flag("--json", reg_json);

  // serve
  ServeOptions serve_opts;
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP service");
  serve_cmd->add_option("--port", serve_opts.port)->capture_default_str();
  serve_cmd->add_option("--host", serve_opts.host)->capture_default_str();
  serve_cmd->add_option("--static", static_dir, "directory with studio assets to serve at /");

  std::vector<const char*> argv{"colortool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "colortool: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (palette_cmd->parsed()) {
      print_hexes(resolve_palette(pal).colors, pal_json, out);
      return kExitOk;
    }
    if (convert_cmd->parsed()) {
      return cmd_convert(conv_from, conv_to, conv_values, conv_json, out);
    }
    if (simulate_cmd->parsed()) {
      const int chosen = (sim_cvd.empty() ? 0 : 1) + (sim_desaturate ? 1 : 0) + (sim_adjust ? 1 : 0);
      if (chosen != 1) {
        throw UsageError{"choose exactly one of --cvd, --desaturate, --adjust"};
      }
      const auto colors = parse_colors(sim_colors);
      std::vector<HexCode> result;
      if (!sim_cvd.empty()) result = simulate_cvd(colors, parse_cvd_kind(sim_cvd), sim_severity);
      else if (sim_desaturate) result = desaturate(colors, *sim_desaturate);
      else result = adjust_luminance(colors, *sim_adjust);
      print_hexes(result, sim_json, out);
      return kExitOk;
    }
    if (contrast_cmd->parsed()) {
      const auto colors = parse_colors(contrast_colors);
      const double ratio = contrast_ratio(colors[0], colors[1]);
      if (assess_json) out << json{{"contrast", ratio}}.dump() << '\n';
      else out << format_fixed(ratio, 2) << '\n';
      return kExitOk;
    }
    if (mono_cmd->parsed()) {
      const auto profile = luminance_profile(parse_colors(mono_colors));
      if (assess_json) {
        out << json{{"monotone", profile.monotone}, {"luminance", profile.luminance}}.dump() << '\n';
      } else {
        out << (profile.monotone ? "yes" : "no") << '\n';
        for (std::size_t k = 0; k < profile.luminance.size(); ++k) {
          out << (k ? " " : "") << format_fixed(profile.luminance[k], 4);
        }
        out << '\n';
      }
      return kExitOk;
    }
    if (swatch_cmd->parsed()) {
      Palette p = resolve_palette(sw_pal);
      const std::string label = !sw_label.empty() ? sw_label : p.label;
      emit_svg(swatchplot({{sw_plot.title, {{label, std::move(p)}}}}, {sw_plot.width, sw_plot.height}),
               sw_plot, out);
      return kExitOk;
    }
    if (spec_cmd->parsed()) {
      Palette p = resolve_palette(sp_pal);
      if (!sp_plot.title.empty()) p.label = sp_plot.title;
      emit_svg(specplot(p, {sp_plot.width, sp_plot.height}), sp_plot, out);
      return kExitOk;
    }
    if (hcl_cmd->parsed()) {
      PaletteSpec spec = resolve_spec(hp_pal);
      if (!hp_plot.title.empty()) spec.name = hp_plot.title;
      emit_svg(hclplot(spec, hp_pal.n, {hp_plot.width, hp_plot.height}), hp_plot, out);
      return kExitOk;
    }
    if (demo_cmd->parsed()) {
      const Palette p = resolve_palette(demo_pal);
      const DemoGrid grid = make_demo_grid(demo_seed);
      const PlotSize size{demo_plot.width, demo_plot.height};
      if (demo_compare) {
        const CvdKind kind = demo_cvd.empty() ? CvdKind::deutan : parse_cvd_kind(demo_cvd);
        const std::vector<SvgDocument> panels = {
            demoplot_heatmap(p, grid),
            demoplot_heatmap({p.label, simulate_cvd(p.colors, kind, demo_severity)}, grid),
            demoplot_heatmap({p.label, desaturate(p.colors, demo_desaturate.value_or(1.0))}, grid),
        };
        const std::string cvd_title = std::string(to_string(kind)) + " " + format_number(demo_severity);
        std::vector<std::string> labels;
        if (!demo_plot.title.empty()) labels.push_back(demo_plot.title);
        emit_svg(panel_grid(panels, 3, {"Original", cvd_title, "Desaturated"}, labels), demo_plot, out);
        return kExitOk;
      }
      Palette shown = p;
      if (!demo_cvd.empty()) {
        shown.colors = simulate_cvd(shown.colors, parse_cvd_kind(demo_cvd), demo_severity);
      }
      if (demo_desaturate) shown.colors = desaturate(shown.colors, *demo_desaturate);
      emit_svg(demoplot_heatmap(shown, grid, demo_plot.title, size), demo_plot, out);
      return kExitOk;
    }
    if (list_cmd->parsed()) {
      return cmd_registry_list(reg_json, out);
    }
    if (show_cmd->parsed()) {
      const PaletteSpec spec = active_registry().get(show_name, parse_overrides(show_overrides));
      if (reg_json) out << spec_to_json(spec).dump() << '\n';
      else out << describe(spec);
      return kExitOk;
    }
    if (serve_cmd->parsed()) {
      serve_opts.static_dir = static_dir;
      err << "colortool: serving on http://" << serve_opts.host << ':' << serve_opts.port << '\n';
      if (!serve(active_registry(), serve_opts)) {
        err << "colortool: cannot bind " << serve_opts.host << ':' << serve_opts.port << '\n';
        return kExitDataError;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "colortool: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "colortool: " << e.what() << '\n';
    return kExitDataError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace colortool::cli
