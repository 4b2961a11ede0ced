// Command-line front end over the C interface.
//
// Exit status: 0 success or "yes", 1 negative answer (not Burling,
// verification failed), 2 input or usage error, 3 internal failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burling.h"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Failure {
  int code;
  std::string message;
};

std::string one_line(std::string text) {
  while (!text.empty() && text.back() == '\n') text.pop_back();
  std::string out;
  for (char c : text) {
    if (c == '\n') {
      out += "; ";
    } else {
      out += c;
    }
  }
  return out;
}

// Throws Failure for anything but OK and NEGATIVE.
burling_status check(burling_status status) {
  if (status == BURLING_OK || status == BURLING_NEGATIVE) return status;
  int code = status == BURLING_ERR_INPUT ? kExitInput : kExitInternal;
  throw Failure{code, one_line(burling_last_error())};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitInput, "cannot open '" + path + "'"};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct StringDeleter {
  void operator()(char* s) const { burling_string_free(s); }
};
using String = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(burling_graph* g) const { burling_graph_free(g); }
};
struct SetDeleter {
  void operator()(burling_set* b) const { burling_set_free(b); }
};
struct FramesDeleter {
  void operator()(burling_frames* f) const { burling_frames_free(f); }
};
using Graph = std::unique_ptr<burling_graph, GraphDeleter>;
using Set = std::unique_ptr<burling_set, SetDeleter>;
using Frames = std::unique_ptr<burling_frames, FramesDeleter>;

Graph load_graph(const std::string& path) {
  burling_graph* g = nullptr;
  check(burling_graph_parse(read_text(path).c_str(), &g));
  return Graph(g);
}

Set load_set(const std::string& path) {
  burling_set* b = nullptr;
  check(burling_set_parse_json(read_text(path).c_str(), &b));
  return Set(b);
}

Frames load_frames(const std::string& path) {
  burling_frames* f = nullptr;
  check(burling_frames_parse_json(read_text(path).c_str(), &f));
  return Frames(f);
}

void print_set(const burling_set* b) {
  char* json = nullptr;
  check(burling_set_to_json(b, &json));
  std::cout << String(json).get();
}

int print_report(burling_status status, char* raw) {
  String report(raw);
  if (status == BURLING_OK) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << "INVALID\n" << report.get();
  return kExitNegative;
}

using MisFn = burling_status (*)(const burling_graph*, const int64_t*, uint32_t*, size_t*, int64_t*);

int run_mis(const std::string& graph_path, const std::string& weights_path, MisFn solve) {
  Graph g = load_graph(graph_path);
  const size_t n = burling_graph_vertex_count(g.get());
  std::vector<int64_t> weights(n);
  check(burling_weights_parse(g.get(), read_text(weights_path).c_str(), weights.data()));
  std::vector<uint32_t> members(n);
  size_t count = 0;
  int64_t total = 0;
  if (check(solve(g.get(), weights.data(), members.data(), &count, &total)) == BURLING_NEGATIVE) {
    std::cout << "NOT_BURLING\n";
    return kExitNegative;
  }
  std::cout << total << '\n';
  for (size_t i = 0; i < count; ++i) std::cout << (i ? " " : "") << members[i];
  std::cout << '\n';
  return 0;
}

using RecognizeFn = burling_status (*)(const burling_graph*, burling_set**);

int run_recognize(const std::string& graph_path, RecognizeFn solve) {
  Graph g = load_graph(graph_path);
  burling_set* b = nullptr;
  if (check(solve(g.get(), &b)) == BURLING_NEGATIVE) {
    std::cout << "NOT_BURLING\n";
    return kExitNegative;
  }
  Set owned(b);
  print_set(owned.get());
  return 0;
}

burling_status recognize_fast(const burling_graph* g, burling_set** out) { return burling_recognize(g, out, nullptr); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burling graph recognition, frame representations and independent sets"};
  app.require_subcommand(1);
  int code = 0;

  std::string graph_path, set_path, frames_path, weights_path, out_path;
  bool linear = false;
  size_t gen_n = 0;
  uint64_t gen_seed = 0;

  auto* recognize = app.add_subcommand("recognize", "Burling set for a graph, or NOT_BURLING");
  recognize->add_option("graph", graph_path, "graph file")->required();
  recognize->callback([&] { code = run_recognize(graph_path, recognize_fast); });

  auto* frames = app.add_subcommand("frames", "strict frame representation of a Burling set");
  frames->add_option("set", set_path, "Burling set JSON file")->required();
  frames->add_flag("--linear", linear, "emit only the linear-size horizontal constraint system");
  frames->callback([&] {
    Set b = load_set(set_path);
    burling_frames* f = nullptr;
    check(burling_frames_build(b.get(), linear ? 1 : 0, &f));
    Frames owned(f);
    char* json = nullptr;
    check(burling_frames_to_json(owned.get(), &json));
    std::cout << String(json).get();
  });

  auto* mis = app.add_subcommand("mis", "maximum-weight independent set of a Burling graph");
  mis->add_option("graph", graph_path, "graph file")->required();
  mis->add_option("--weights", weights_path, "weights file")->required();
  mis->callback([&] { code = run_mis(graph_path, weights_path, burling_mis); });

  auto* verify = app.add_subcommand("verify", "check a Burling set or a frame family");
  verify->require_subcommand(1);
  auto* verify_set = verify->add_subcommand("set", "check the Burling set axioms");
  verify_set->add_option("file", set_path, "Burling set JSON file")->required();
  verify_set->callback([&] {
    Set b = load_set(set_path);
    char* report = nullptr;
    burling_status status = check(burling_set_verify(b.get(), &report));
    code = print_report(status, report);
  });
  auto* verify_frames = verify->add_subcommand("frames", "check that a frame family is strict");
  verify_frames->add_option("file", frames_path, "frames JSON file")->required();
  verify_frames->callback([&] {
    Frames f = load_frames(frames_path);
    char* report = nullptr;
    burling_status status = check(burling_frames_verify(f.get(), &report));
    code = print_report(status, report);
  });

  auto* gen = app.add_subcommand("gen", "random Burling set");
  gen->add_option("--n", gen_n, "number of elements")->required();
  gen->add_option("--seed", gen_seed, "random seed")->required();
  gen->callback([&] {
    burling_set* b = nullptr;
    check(burling_generate(gen_n, gen_seed, &b));
    Set owned(b);
    print_set(owned.get());
  });

  auto* svg = app.add_subcommand("svg", "draw a frame family");
  svg->add_option("frames", frames_path, "frames JSON file")->required();
  svg->add_option("-o,--output", out_path, "SVG file to write")->required();
  svg->callback([&] {
    Frames f = load_frames(frames_path);
    char* text = nullptr;
    check(burling_frames_to_svg(f.get(), &text));
    String owned(text);
    std::ofstream out(out_path, std::ios::binary);
    out << owned.get();
    if (!out) throw Failure{kExitInput, "cannot write '" + out_path + "'"};
  });

  auto* oracle = app.add_subcommand("oracle", "brute-force answers for small graphs");
  oracle->require_subcommand(1);
  auto* oracle_recognize = oracle->add_subcommand("recognize", "exhaustive recognition (n <= 6)");
  oracle_recognize->add_option("graph", graph_path, "graph file")->required();
  oracle_recognize->callback([&] { code = run_recognize(graph_path, burling_oracle_recognize); });
  auto* oracle_mis = oracle->add_subcommand("mis", "exhaustive independent set (n <= 24)");
  oracle_mis->add_option("graph", graph_path, "graph file")->required();
  oracle_mis->add_option("--weights", weights_path, "weights file")->required();
  oracle_mis->callback([&] { code = run_mis(graph_path, weights_path, burling_oracle_mis); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << one_line(e.what()) << '\n';
    return kExitInput;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return code;
}
