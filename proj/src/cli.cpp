#include "hdm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hdm/constructions.hpp"
#include "hdm/error.hpp"
#include "hdm/ncube.hpp"
#include "hdm/symmetry.hpp"

namespace hdm::cli {

namespace {

// Carries an exit code out of a subcommand handler.
struct Exit {
  int code;
  std::string message;
};

SignCube read_cube(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse(buffer.str());
  } catch (const ParseError& e) {
    throw Exit{kUsage, path + ": parse error at " + e.what()};
  }
}

void write_payload(const std::string& path, const std::string& payload, std::ostream& out) {
  if (path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << payload)) throw Exit{kUsage, "cannot write " + path};
}

Field field_for_order(std::int64_t q) {
  if (q < 3 || q > std::numeric_limits<std::int32_t>::max()) {
    throw Exit{kUsage, "order not covered: q=" + std::to_string(q) + " is not an odd prime power"};
  }
  try {
    return Field(static_cast<std::uint64_t>(q));
  } catch (const NotOddPrimePower&) {
    throw Exit{kUsage, "order not covered: q=" + std::to_string(q) + " is not an odd prime power"};
  }
}

struct ConstructArgs {
  std::string kind;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> v;
  std::string input;
  std::optional<std::size_t> dim;
  int chi0 = -1;
  std::string out;
};

Field field_from(const ConstructArgs& a) {
  if (a.q && a.v) throw Exit{kUsage, "--q and --v are mutually exclusive"};
  if (a.q) return field_for_order(*a.q);
  if (a.v) return field_for_order(*a.v - 1);
  throw Exit{kUsage, a.kind + " requires --q or --v"};
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<SignCube> cube;
  try {
    if (a.kind == "paley2") {
      cube = paley2(field_from(a));
    } else if (a.kind == "paley3") {
      cube = paley3(field_from(a));
    } else if (a.kind == "almost-cube") {
      if (a.chi0 != 1 && a.chi0 != -1) throw Exit{kUsage, "--chi0 must be 1 or -1"};
      cube = almost_cube(field_from(a), a.dim.value_or(3), Sign::from_int(a.chi0));
    } else if (a.kind == "product" || a.kind == "lift") {
      if (a.input.empty()) throw Exit{kUsage, a.kind + " requires --input"};
      const SignCube input = read_cube(a.input);
      if (a.kind == "product") {
        if (!a.dim) throw Exit{kUsage, "product requires --dim"};
        cube = yang_product(input, *a.dim);
      } else {
        cube = dim_lift(input);
      }
    } else {
      throw Exit{kUsage, "unknown kind " + a.kind};
    }
  } catch (const NotHadamardInput& e) {
    throw Exit{kHypothesis, e.what()};
  } catch (const Error& e) {
    throw Exit{kUsage, e.what()};
  }
  write_payload(a.out, serialize(*cube), out);
  (a.out.empty() ? err : out) << a.kind << " n=" << cube->dimension() << " v=" << cube->order() << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string path;
  bool proper = false;
  bool psl = false;
  bool cyclic = false;
  std::optional<std::int64_t> q;
};

int cmd_verify(const VerifyArgs& a, unsigned threads, std::ostream& out) {
  const SignCube cube = read_cube(a.path);
  std::optional<Field> field;
  if (a.psl) {
    if (!a.q) throw Exit{kUsage, "--psl requires --q"};
    field = field_for_order(*a.q);
    if (cube.order() != std::size_t{field->q()} + 1) {
      throw Exit{kUsage, "order v=" + std::to_string(cube.order()) + " does not match q=" + std::to_string(*a.q)};
    }
  }
  if (a.cyclic && cube.dimension() != 3) throw Exit{kUsage, "--cyclic needs a 3-dimensional matrix"};
  if (a.psl && cube.dimension() != 3) throw Exit{kUsage, "--psl needs a 3-dimensional matrix"};

  bool all = true;
  auto line = [&](const char* name, bool passed, const std::string& detail) {
    out << name << ": " << detail << '\n';
    all = all && passed;
  };
  try {
    const VerifyReport hadamard = is_hadamard(cube, VerifyOptions{threads});
    line("hadamard", hadamard.passed, describe(hadamard));
    if (a.proper) {
      const VerifyReport proper = is_proper(cube);
      line("proper", proper.passed, describe(proper));
    }
  } catch (const DimensionTooSmall& e) {
    throw Exit{kUsage, e.what()};
  }
  if (a.cyclic) {
    const bool ok = check_cyclic(cube);
    line("cyclic", ok, ok ? "PASS" : "FAIL");
  }
  if (a.psl) {
    const bool ok = check_psl_invariance(cube, *field);
    line("psl", ok, ok ? "PASS" : "FAIL");
  }
  return all ? kOk : kCheckFailed;
}

int cmd_info(const std::string& path, std::ostream& out) {
  const SignCube cube = read_cube(path);
  out << "n=" << cube.dimension() << " v=" << cube.order() << " entries=" << cube.size() << '\n';
  return kOk;
}

int cmd_layer(const std::string& path, const std::vector<std::string>& fixes, const std::string& out_path,
              std::ostream& out) {
  const SignCube cube = read_cube(path);
  FixedCoords fixed;
  for (const std::string& spec : fixes) {
    const std::size_t eq = spec.find('=');
    std::size_t pos = 0, value = 0;
    try {
      if (eq == std::string::npos) throw std::invalid_argument(spec);
      std::size_t used = 0;
      pos = std::stoul(spec.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument(spec);
      value = std::stoul(spec.substr(eq + 1), &used);
      if (used != spec.size() - eq - 1) throw std::invalid_argument(spec);
    } catch (const std::logic_error&) {
      throw Exit{kUsage, "--fix expects <coord>=<index>, got '" + spec + "'"};
    }
    if (!fixed.emplace(pos, value).second) throw Exit{kUsage, "coordinate " + std::to_string(pos) + " fixed twice"};
  }
  try {
    write_payload(out_path, serialize(layer(cube, fixed)), out);
  } catch (const Error& e) {
    throw Exit{kUsage, e.what()};
  }
  return kOk;
}

int cmd_chi_table(std::int64_t q, std::ostream& out) {
  const Field field = field_for_order(q);
  for (std::size_t i = 1; i < field.q(); ++i) {
    const FieldElem& e = field.element(i);
    out << i << ' ' << field.to_string(e) << ' ' << (field.chi(e).is_plus() ? "+1" : "-1") << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify higher-dimensional Hadamard matrices", "hdm"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for verification (0 = hardware default)");

  ConstructArgs construct;
  auto* sc_construct = app.add_subcommand("construct", "Build a matrix and write it in HDM format");
  sc_construct->add_option("--kind", construct.kind, "paley2 | paley3 | product | lift | almost-cube")
      ->required()
      ->check(CLI::IsMember({"paley2", "paley3", "product", "lift", "almost-cube"}));
  sc_construct->add_option("--q", construct.q, "Odd prime power q (order v = q + 1)");
  sc_construct->add_option("--v", construct.v, "Order v; uses q = v - 1");
  sc_construct->add_option("--input", construct.input, "Input HDM file (product, lift)");
  sc_construct->add_option("--dim", construct.dim, "Target dimension (product; almost-cube, default 3)");
  sc_construct->add_option("--chi0", construct.chi0, "Value used for chi(0) by almost-cube (default -1)");
  sc_construct->add_option("--out", construct.out, "Output path (default: standard output)");

  VerifyArgs verify;
  auto* sc_verify = app.add_subcommand("verify", "Check Hadamard properties of an HDM file");
  sc_verify->add_option("path", verify.path, "HDM file")->required();
  sc_verify->add_flag("--proper", verify.proper, "Also require every 2-dimensional layer to be Hadamard");
  sc_verify->add_flag("--cyclic", verify.cyclic, "Also check invariance under cyclic coordinate shifts");
  sc_verify->add_flag("--psl", verify.psl, "Also check PSL(2,q) invariance (needs --q)");
  sc_verify->add_option("--q", verify.q, "Field order binding indices to PG(1,q)");

  std::string info_path;
  auto* sc_info = app.add_subcommand("info", "Print dimension, order and entry count");
  sc_info->add_option("path", info_path, "HDM file")->required();

  std::string layer_path, layer_out;
  std::vector<std::string> layer_fixes;
  auto* sc_layer = app.add_subcommand("layer", "Extract a layer by fixing coordinates");
  sc_layer->add_option("path", layer_path, "HDM file")->required();
  sc_layer->add_option("--fix", layer_fixes, "<coord>=<index>, coordinates 1-based, indices 0-based")->required();
  sc_layer->add_option("--out", layer_out, "Output path (default: standard output)");

  std::int64_t chi_q = 0;
  auto* sc_chi = app.add_subcommand("chi-table", "Print the quadratic character on the non-zero field elements");
  sc_chi->add_option("--q", chi_q, "Odd prime power")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*sc_construct) return cmd_construct(construct, out, err);
    if (*sc_verify) return cmd_verify(verify, threads, out);
    if (*sc_info) return cmd_info(info_path, out);
    if (*sc_layer) return cmd_layer(layer_path, layer_fixes, layer_out, out);
    if (*sc_chi) return cmd_chi_table(chi_q, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hdm::cli
