#include "blip/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <iomanip>
#include <system_error>

#include "blip/contrast.hpp"
#include "blip/dsl.hpp"
#include "blip/error.hpp"
#include "blip/parallel.hpp"
#include "blip/raster.hpp"

namespace blip::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string expr;
  std::vector<std::string> bindings;
  double sigma = 0.0;
  std::string mode;
  int neighborhood = 4;
  std::string display = "magnitude";
  std::string against;
  std::size_t threads = 0;
};

// Usage problems detected after CLI11 has accepted the arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_number(std::string_view text, const std::string& binding) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (first == last || res.ec != std::errc{} || res.ptr != last || !std::isfinite(value)) {
    throw ExprError("binding '" + binding + "': '" + std::string(text) + "' is not a number");
  }
  return value;
}

GrayLevel parse_level(std::string_view text, const std::string& binding) {
  const double v = parse_number(text, binding);
  if (!(v > -1.0 && v < 1.0)) {
    throw ExprError("binding '" + binding + "': " + std::string(text) + " is outside (-1, 1)");
  }
  return GrayLevel(v);
}

// name=@path | name=r,g,b | name=c
void apply_binding(dsl::Env& env, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ExprError("binding '" + spec + "' must look like name=value");
  }
  const std::string name = spec.substr(0, eq);
  const std::string value = spec.substr(eq + 1);
  try {
    dsl::var(name);
  } catch (const std::invalid_argument&) {
    throw ExprError("binding name '" + name + "' is not an identifier");
  }

  if (!value.empty() && value[0] == '@') {
    env.bind(name, std::make_shared<const ImagePlane>(to_model(read_pnm(value.substr(1)))));
    return;
  }
  std::vector<std::string_view> parts;
  std::string_view rest = value;
  while (true) {
    const auto comma = rest.find(',');
    parts.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (parts.size() == 3) {
    env.bind(name, ColorVec{parse_level(parts[0], name), parse_level(parts[1], name),
                            parse_level(parts[2], name)});
  } else if (parts.size() == 1) {
    env.bind(name, parse_level(parts[0], name));
  } else {
    throw ExprError("binding '" + name + "' needs one value or an r,g,b triple");
  }
}

int do_apply(const Options& o) {
  const ImagePlane f = to_model(read_pnm(o.input));
  dsl::Env env(f);
  if (o.sigma != 0.0) {
    if (!(o.sigma > 0.0)) throw UsageError("--sigma must be positive");
    env.bind("I_G", std::make_shared<const ImagePlane>(gaussian_correction(f, o.sigma)));
  }
  for (const auto& b : o.bindings) apply_binding(env, b);
  const ImagePlane result = dsl::run(o.expr, env);
  write_pnm(o.output, from_model(result));
  return kOk;
}

int do_contrast(const Options& o) {
  const ImagePlane f = to_model(read_pnm(o.input));
  const NeighborhoodSpec hood{o.neighborhood == 8 ? Connectivity::eight : Connectivity::four};
  const ImagePlane map = contrast_map(f, parse_contrast_mode(o.mode), hood);
  const Display display = o.display == "signed" ? Display::signed_values : Display::magnitude;
  write_pnm(o.output, render_display(map, display));
  return kOk;
}

int do_stats(const Options& o, std::ostream& out) {
  const ImagePlane f = to_model(read_pnm(o.input));
  out << std::setprecision(15);
  out << "l2_norm=" << l2_norm(f) << '\n';
  if (!o.against.empty()) {
    const ImagePlane g = to_model(read_pnm(o.against));
    out << "l2_dot=" << l2_dot(f, g) << '\n';
  }
  return kOk;
}

int do_info(const Options& o, std::ostream& out) {
  const ImagePlane f = to_model(read_pnm(o.input));
  out << "width=" << f.width() << '\n'
      << "height=" << f.height() << '\n'
      << "kind=" << to_string(f.kind()) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bounded logarithmic image processing"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

  auto* apply = app.add_subcommand("apply", "Evaluate a transform expression on an image");
  apply->add_option("--expr,-e", o.expr, "Transform expression, e.g. \"f <+> 0.93\"")->required();
  apply->add_option("--bind,-b", o.bindings, "name=r,g,b | name=c | name=@image.pnm");
  apply->add_option("--sigma", o.sigma, "Bind I_G to a Gaussian correction image of this sigma");
  apply->add_option("-i,--input", o.input, "Input PGM/PPM")->required();
  apply->add_option("-o,--output", o.output, "Output PGM/PPM")->required();

  auto* contrast = app.add_subcommand("contrast", "Render a contrast (contour) map");
  contrast->add_option("--mode,-m", o.mode, "horizontal | vertical | pixel")
      ->required()
      ->check(CLI::IsMember({"horizontal", "vertical", "pixel"}));
  contrast->add_option("--neighborhood,-n", o.neighborhood, "4 or 8")
      ->check(CLI::IsMember({4, 8}));
  contrast->add_option("--display", o.display, "magnitude | signed")
      ->check(CLI::IsMember({"magnitude", "signed"}));
  contrast->add_option("-i,--input", o.input, "Input PGM/PPM")->required();
  contrast->add_option("-o,--output", o.output, "Output PGM")->required();

  auto* stats = app.add_subcommand("stats", "Print the L2 norm (and scalar product)");
  stats->add_option("-i,--input", o.input, "Input PGM/PPM")->required();
  stats->add_option("--against", o.against, "Second image for the scalar product");

  auto* info = app.add_subcommand("info", "Print width, height and kind");
  info->add_option("-i,--input", o.input, "Input PGM/PPM")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  parallel::set_worker_count(o.threads);
  try {
    if (apply->parsed()) return do_apply(o);
    if (contrast->parsed()) return do_contrast(o);
    if (stats->parsed()) return do_stats(o, out);
    return do_info(o, out);
  } catch (const ExprError& e) {
    err << "error: " << e.what() << '\n';
    return kExpression;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::system_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputOutput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputOutput;
  }
}

}  // namespace blip::cli
