// Command-line workbench: analyze, verify, remark, random, dot, table.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "locale_lab/locale_lab.hpp"

namespace fs = std::filesystem;
using namespace locale_lab;

namespace {

enum Exit : int { ok = 0, check_failed = 1, bad_input = 2, cap_hit = 3, io_failure = 4 };

struct Config {
  std::vector<std::string> inputs;
  std::size_t cap = cap_from_environment();
  std::uint64_t seed = 1;
  std::size_t bound = 4;
  std::size_t count = 200;
  std::string format = "text";
  std::string out_dir;
  std::string mutant = "none";
  std::string what = "assembly";
  bool space_input = false;
  std::string s_desc = "tail: offset=2 pattern=10 ; bottom: yes";
  std::string t_desc = "tail: offset=1 pattern=10 ; bottom: yes";
  std::vector<std::size_t> truncate{16, 32, 64};
};

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << content;
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

/// Writes to `name` under the output directory, or to stdout without one.
void emit(const Config& cfg, const std::string& name, const std::string& content) {
  if (cfg.out_dir.empty()) {
    std::cout << content;
  } else {
    write_file(fs::path(cfg.out_dir) / name, content);
    std::cout << "wrote " << (fs::path(cfg.out_dir) / name).string() << "\n";
  }
}

std::string witness_text(const FiniteFrame& f, const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& n : notes) out += "# " + n + "\n";
  return out + frame_text(f);
}

std::string zero_padded(std::size_t k, int width = 3) {
  std::ostringstream s;
  s << std::setw(width) << std::setfill('0') << k;
  return s.str();
}

int cmd_analyze(const Config& cfg) {
  int status = ok;
  for (const auto& path : cfg.inputs) {
    FramePtr frame = share(load_frame(path));
    if (cfg.format == "dot") {
      std::cout << assembly_dot(enumerate_assembly(frame, cfg.cap), fs::path(path).stem().string());
      continue;
    }
    Classification c = classify(frame, cfg.cap);
    if (cfg.inputs.size() > 1) std::cout << (cfg.format == "keyvalue" ? "# " : "== ") << path << "\n";
    std::cout << (cfg.format == "keyvalue" ? format_keyvalue(c) : format_text(c));
    if (!c.all_agree()) {
      std::vector<std::string> notes{"classification disagreement for " + path};
      for (const auto& r : c.rows)
        if (!r.agree()) notes.push_back("DISAGREE " + r.key);
      fs::path dir = cfg.out_dir.empty() ? fs::path("witnesses") : fs::path(cfg.out_dir);
      fs::path file = dir / (fs::path(path).stem().string() + "-disagree.frame");
      write_file(file, witness_text(*frame, notes));
      std::cerr << "witness written to " << file.string() << "\n";
      status = check_failed;
    } else if (c.degraded && status == ok) {
      status = cap_hit;
    }
  }
  return status;
}

int cmd_verify(const Config& cfg) {
  auto mutant = parse_mutant(cfg.mutant);
  if (!mutant) throw CLI::ValidationError("--mutant", "unknown mutant '" + cfg.mutant + "'");
  ScopedMutant guard(*mutant);
  if (cfg.count == 0) {
    std::cout << "warning: no frames generated; nothing verified\n";
    return ok;
  }
  VerifyReport report = verify_random(cfg.seed, cfg.bound, cfg.count, cfg.cap);
  fs::path dir = cfg.out_dir.empty() ? fs::path("witnesses") : fs::path(cfg.out_dir);
  for (const auto& fl : report.failures) {
    std::cout << "frame " << fl.index << ": " << format_result(fl.result);
    fs::path file = dir / ("frame-" + zero_padded(fl.index) + "-" + fl.result.name + ".frame");
    std::vector<std::string> notes{"suite " + fl.result.name + " failed (seed " + std::to_string(cfg.seed) +
                                   ", bound " + std::to_string(cfg.bound) + ", frame " + std::to_string(fl.index) +
                                   ", mutant " + cfg.mutant + ")"};
    for (const auto& [label, v] : fl.result.conditions) notes.push_back(std::string(v ? "true  " : "false ") + label);
    write_file(file, witness_text(*fl.frame, notes));
  }
  std::cout << "frames: " << report.frames << "\nsuites evaluated: " << report.suites
            << "\nfailures: " << report.failures.size() << "\n"
            << (report.passed() ? "all theorems pass" : "verification FAILED") << "\n";
  return report.passed() ? ok : check_failed;
}

int cmd_remark(const Config& cfg) {
  RemarkRun r = run_remark(parse_chain(cfg.s_desc), parse_chain(cfg.t_desc), cfg.truncate);
  for (const auto& line : r.transcript) std::cout << line << "\n";
  return r.truncations_agree() ? ok : check_failed;
}

int cmd_random(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.count; ++k) {
    FiniteFrame f = random_frame(rng, cfg.bound);
    if (cfg.out_dir.empty()) {
      if (k) std::cout << "\n";
      std::cout << "# frame " << k << " (seed " << cfg.seed << ", bound " << cfg.bound << ")\n" << frame_text(f);
    } else {
      write_file(fs::path(cfg.out_dir) / ("random-" + zero_padded(k) + ".frame"), frame_text(f));
    }
  }
  if (!cfg.out_dir.empty()) std::cout << "wrote " << cfg.count << " frames to " << cfg.out_dir << "\n";
  return ok;
}

int cmd_dot(const Config& cfg) {
  for (const auto& path : cfg.inputs) {
    std::string stem = fs::path(path).stem().string();
    if (cfg.space_input) {
      emit(cfg, stem + "-space.dot", space_dot(load_space(path), stem));
      continue;
    }
    FramePtr frame = share(load_frame(path));
    if (cfg.what == "frame") {
      emit(cfg, stem + "-frame.dot", frame_dot(*frame, stem));
    } else {
      emit(cfg, stem + "-assembly.dot", assembly_dot(enumerate_assembly(frame, cfg.cap), stem));
    }
  }
  return ok;
}

/// Classifies the fixture frames and `count` random frames and tallies each row.
int cmd_table(const Config& cfg) {
  std::vector<std::pair<std::string, FramePtr>> frames{
      {"2-chain", share(chain_frame(2))},
      {"3-chain", share(chain_frame(3))},
      {"boolean-square", share(boolean_square())},
      {"sierpinski-opens", omega(sierpinski_space()).frame},
      {"antichain-with-top", share(with_new_top(boolean_square()))}};
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.count; ++k)
    frames.emplace_back("random-" + zero_padded(k), share(random_frame(rng, cfg.bound)));

  std::vector<TableRow> rows;
  std::vector<std::size_t> agree, holds;
  std::size_t skipped = 0;
  int status = ok;
  for (const auto& [name, frame] : frames) {
    Classification c = classify(frame, cfg.cap);
    if (c.degraded) {
      ++skipped;
      continue;
    }
    if (rows.empty()) {
      rows = c.rows;
      agree.assign(rows.size(), 0);
      holds.assign(rows.size(), 0);
    }
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
      agree[i] += c.rows[i].agree();
      holds[i] += c.rows[i].relation_holds;
      if (!c.rows[i].agree()) {
        status = check_failed;
        fs::path dir = cfg.out_dir.empty() ? fs::path("witnesses") : fs::path(cfg.out_dir);
        write_file(dir / (name + "-" + c.rows[i].key + ".frame"),
                   witness_text(*frame, {"DISAGREE " + c.rows[i].key + " on " + name}));
      }
    }
  }
  std::size_t classified = frames.size() - skipped;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (cfg.format == "keyvalue") {
      std::cout << "row." << rows[i].key << ".agree=" << agree[i] << "\nrow." << rows[i].key << ".holds=" << holds[i]
                << "\n";
    } else {
      std::cout << (agree[i] == classified ? "AGREE    " : "DISAGREE ") << std::left << std::setw(20)
                << rows[i].relation << " " << std::setw(24) << rows[i].property << " holds on " << holds[i] << "/"
                << classified << "\n";
    }
  }
  std::cout << (cfg.format == "keyvalue" ? "frames=" : "frames classified: ") << classified << "\n";
  if (skipped) std::cout << (cfg.format == "keyvalue" ? "skipped=" : "skipped (cap): ") << skipped << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames, their sublocales and T_D phenomena"};
  app.require_subcommand(1);
  Config cfg;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Assembly size cap (default from LOCALE_LAB_CAP)")->check(CLI::PositiveNumber);
  };
  std::size_t verify_count = 200, random_count = 1, table_count = 200;
  auto add_generator = [&](CLI::App* sub, std::size_t& count) {
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--bound", cfg.bound, "Maximum number of poset points")->check(CLI::Range(1, 7));
    sub->add_option("--count", count, "Number of frames")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* analyze = app.add_subcommand("analyze", "Classify frames from files");
  analyze->add_option("inputs", cfg.inputs, "Frame files")->required()->check(CLI::ExistingFile);
  add_cap(analyze);
  add_format(analyze, {"text", "keyvalue", "dot"});
  analyze->add_option("--out-dir", cfg.out_dir, "Directory for witness files");

  auto* verify = app.add_subcommand("verify", "Run the theorem suites on random frames");
  add_generator(verify, verify_count);
  add_cap(verify);
  verify->add_option("--mutant", cfg.mutant, "Enable a deliberate defect");
  verify->add_option("--out-dir", cfg.out_dir, "Directory for witness files");

  auto* remark = app.add_subcommand("remark", "Two D-sublocales of the omega chain with a non-D intersection");
  remark->add_option("--s", cfg.s_desc, "Description of S");
  remark->add_option("--t", cfg.t_desc, "Description of T");
  remark->add_option("--truncate", cfg.truncate, "Truncation depths to cross-check")->delimiter(',');

  auto* random = app.add_subcommand("random", "Generate random frames");
  add_generator(random, random_count);
  auto* dot = app.add_subcommand("dot", "Export Hasse diagrams");
  auto* table = app.add_subcommand("table", "Evaluate the relation table over fixtures and random frames");
  add_generator(table, table_count);
  for (auto* sub : {random, dot, table}) sub->add_option("--out-dir", cfg.out_dir, "Output directory");
  dot->add_option("inputs", cfg.inputs, "Frame or space files")->required()->check(CLI::ExistingFile);
  dot->add_option("--what", cfg.what, "Diagram of the frame or of its assembly")
      ->check(CLI::IsMember({"frame", "assembly"}));
  dot->add_flag("--space", cfg.space_input, "Inputs are space files");
  add_cap(dot);
  add_format(table, {"text", "keyvalue"});
  add_cap(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : bad_input;
  }
  cfg.count = verify->parsed() ? verify_count : random->parsed() ? random_count : table_count;

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (remark->parsed()) return cmd_remark(cfg);
    if (random->parsed()) return cmd_random(cfg);
    if (dot->parsed()) return cmd_dot(cfg);
    if (table->parsed()) return cmd_table(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cap_hit;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io_failure;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return io_failure;
  }
  return ok;
}
