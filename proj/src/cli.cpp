#include "sgq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sgq/errors.hpp"
#include "sgq/grassmannian.hpp"
#include "sgq/json_io.hpp"
#include "sgq/smoothness.hpp"

namespace sgq::cli {

namespace {

using nlohmann::json;
using io::to_json;

// Input that cannot be used at all: exit status 2.
struct Malformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path, const char* flag) {
  if (path.empty()) throw Malformed(std::string("missing ") + flag);
  std::ifstream in(path);
  if (!in) throw Malformed("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Malformed(path + ": " + e.what());
  }
}

const BlockProfile& need_profile(const Command& cmd) {
  if (!cmd.profile) throw Malformed("command '" + cmd.name + "' requires --profile m,n,r,s");
  return *cmd.profile;
}

json compute(const Command& cmd) {
  json doc = {{"command", cmd.name}};
  if (cmd.profile) doc["profile"] = to_json(*cmd.profile);

  if (cmd.name == "ber") {
    doc["result"] = to_json(berezinian(io::matrix_from_json(read_json(cmd.in, "--in"))));
  } else if (cmd.name == "minv") {
    doc["result"] = to_json(sm_inv(io::matrix_from_json(read_json(cmd.in, "--in"))));
  } else if (cmd.name == "factor") {
    const auto& bp = need_profile(cmd);
    auto nf = normal_form(io::matrix_from_json(read_json(cmd.in, "--in")), bp);
    doc["result"] = {{"n", to_json(nf.n)}, {"p", to_json(nf.p)}};
  } else if (cmd.name == "coset-eq") {
    const auto& bp = need_profile(cmd);
    SuperMatrix g1 = io::matrix_from_json(read_json(cmd.in, "--in"));
    SuperMatrix g2 = io::matrix_from_json(read_json(cmd.in2, "--in2"));
    doc["result"] = {{"equal", cosets_equal(g1, g2, bp)}};
  } else if (cmd.name == "orbit") {
    const auto& bp = need_profile(cmd);
    doc["result"] = to_json(orbit_map(io::matrix_from_json(read_json(cmd.in, "--in")), bp));
  } else if (cmd.name == "chart-up") {
    const auto& bp = need_profile(cmd);
    doc["result"] = to_json(chart_up(io::ncoords_from_json(read_json(cmd.in, "--in"), bp)));
  } else if (cmd.name == "chart-down") {
    const auto& bp = need_profile(cmd);
    GrassmannianPoint pt = io::point_from_json(read_json(cmd.in, "--in"));
    if (!(pt.profile() == bp)) throw ShapeMismatch("point profile " + pt.profile().to_string() + " vs --profile");
    doc["result"] = to_json(chart_down(pt));
  } else if (cmd.name == "smooth") {
    Presentation pres = io::presentation_from_json(read_json(cmd.in, "--in"));
    RationalPoint pt = io::rational_point_from_json(read_json(cmd.in2, "--in2"));
    SmoothnessVerdict verdict = is_smooth_at(pres, pt);
    doc["result"] = to_json(verdict);
    doc["result"]["etale"] = verdict.smooth && verdict.relative_dimension == std::make_pair<std::size_t, std::size_t>(0, 0);
  } else if (cmd.name == "proptest") {
    ProptestReport report = run_proptest(cmd.proptest);
    doc["result"] = report.to_json();
  } else {
    throw Malformed("unknown command '" + cmd.name + "'");
  }
  return doc;
}

template <std::size_t N>
std::array<std::size_t, N> parse_tuple(const std::string& text, const char* flag) {
  std::array<std::size_t, N> out{};
  std::stringstream in(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(in, item, ',')) {
    if (k == N || item.empty() || item.find_first_not_of("0123456789") != std::string::npos) break;
    out[k++] = std::stoul(item);
  }
  if (k != N || in.good()) {
    throw Malformed(std::string(flag) + " expects " + std::to_string(N) + " comma-separated non-negative integers");
  }
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"ber",      "minv",       "factor", "coset-eq", "orbit",
                                                 "chart-up", "chart-down", "smooth", "proptest"};
  return names;
}

Outcome run(const Command& cmd) {
  try {
    return {0, compute(cmd), ""};
  } catch (const DomainError& e) {
    json doc = {{"command", cmd.name}, {"error", {{"name", e.name()}, {"locus", e.locus()}}}};
    return {1, doc, e.name() + ": " + e.locus()};
  } catch (const Malformed& e) {
    return {2, nullptr, e.what()};
  } catch (const json::exception& e) {
    return {2, nullptr, e.what()};
  } catch (const std::invalid_argument& e) {
    return {2, nullptr, e.what()};
  } catch (const std::out_of_range& e) {
    return {2, nullptr, e.what()};
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Exact super linear algebra and super Grassmannian computations"};
  app.require_subcommand(1, 1);

  Command cmd;
  std::string profile, size;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string suite = "all";

  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    if (name == "proptest") {
      sub->add_option("--suite", suite);
      sub->add_option("--trials", trials);
      sub->add_option("--seed", seed);
      sub->add_option("--size", size, "m,n,r,s,q");
    } else {
      sub->add_option("--in", cmd.in)->required();
      if (name == "coset-eq" || name == "smooth") sub->add_option("--in2", cmd.in2)->required();
      if (name != "ber" && name != "minv" && name != "smooth") sub->add_option("--profile", profile, "m,n,r,s");
    }
    sub->add_option("--out", cmd.out);
    sub->callback([&cmd, name] { cmd.name = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!profile.empty()) {
      auto p = parse_tuple<4>(profile, "--profile");
      cmd.profile = BlockProfile(p[0], p[1], p[2], p[3]);
    }
    cmd.proptest.suite = suite;
    cmd.proptest.trials = trials;
    cmd.proptest.seed = seed;
    if (!size.empty()) {
      auto z = parse_tuple<5>(size, "--size");
      cmd.proptest.m = z[0];
      cmd.proptest.n = z[1];
      cmd.proptest.r = z[2];
      cmd.proptest.s = z[3];
      cmd.proptest.q = z[4];
    }
  } catch (const std::exception& e) {
    std::cerr << "sgq: " << e.what() << "\n";
    return 2;
  }

  Outcome outcome = run(cmd);
  if (!outcome.diagnostic.empty()) std::cerr << "sgq " << cmd.name << ": " << outcome.diagnostic << "\n";
  if (outcome.status == 2) return 2;

  const std::string text = outcome.document.dump(2) + "\n";
  if (cmd.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cmd.out);
    if (!out || !(out << text)) {
      std::cerr << "sgq: cannot write " << cmd.out << "\n";
      return 2;
    }
  }
  return outcome.status;
}

}  // namespace sgq::cli
