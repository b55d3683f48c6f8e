#include "iwip/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "iwip/certify.hpp"
#include "iwip/experiment.hpp"
#include "iwip/json_io.hpp"

namespace iwip {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_inp_flags(CLI::App& app, Command& cmd) {
  app.add_option("--inp-period-bound", cmd.inp.period_bound, "Largest period searched for INPs")
      ->check(CLI::PositiveNumber);
  app.add_option("--inp-length-bound", cmd.inp.length_bound, "Longest INP branch searched")->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App& app, Command& cmd) {
  app.add_option("--out,-o", cmd.output, "Output file (default: standard output)");
  app.add_option("--format", cmd.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"json", OutputFormat::Json},
                                                                              {"text", OutputFormat::Text}},
                                          CLI::ignore_case))
      ->option_text("json|text");
}

void emit(const Command& cmd, std::ostream& out, const std::string& text) {
  if (cmd.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cmd.output);
  if (!file) throw IoError("cannot open " + cmd.output + " for writing");
  file << text;
  if (!file) throw IoError("write to " + cmd.output + " failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open " + path);
  try {
    return Json::parse(file);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

int run_realize(const Command& cmd, std::ostream& out, std::ostream& err) {
  RealizationResult result;
  try {
    result = realize(cmd.rank, cmd.index_list, cmd.legalizing);
  } catch (const LegalizingSearchError& e) {
    err << "realize: " << e.what() << '\n';
    for (const auto& line : e.trace) err << "  " << line << '\n';
    return exit_code::certification_failed;
  }
  emit(cmd, out, cmd.format == OutputFormat::Json ? dump(realization_to_json(result)) : realization_summary(result));
  return exit_code::ok;
}

int run_certify(const Command& cmd, std::ostream& out) {
  const Json doc = read_json(cmd.input);
  CertificationReport report;
  if (is_realization_document(doc)) {
    report = certify_realization(realization_from_json(doc), CertifyOptions{cmd.inp});
  } else {
    report = grade_train_track_map(chain_from_json(doc), cmd.inp);
  }
  emit(cmd, out, cmd.format == OutputFormat::Json ? dump(report_to_json(report)) : report_summary(report));
  return report.level == CertificationLevel::Failed ? exit_code::certification_failed : exit_code::ok;
}

int run_experiment_verb(const Command& cmd, std::ostream& out) {
  ExperimentOptions options;
  options.inp = cmd.inp;
  options.threads = cmd.threads;
  const FrequencyTable table = run_experiment(cmd.rank, cmd.length, cmd.samples, cmd.seed, options);
  emit(cmd, out,
       cmd.format == OutputFormat::Json ? dump(table_to_json(table, cmd.timing)) : format_table(table, 5, cmd.timing));
  return exit_code::ok;
}

int run_enumerate(const Command& cmd, std::ostream& out) {
  if (cmd.rank < 3) throw InputError("enumerate needs rank >= 3");
  const auto lists = enumerate_admissible(cmd.rank);
  if (cmd.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& l : lists) arr.push_back(index_list_to_json(l));
    emit(cmd, out, dump({{"rank", cmd.rank}, {"count", lists.size()}, {"lists", arr}}));
  } else {
    std::ostringstream text;
    for (const auto& l : lists) text << l.to_string() << '\n';
    emit(cmd, out, text.str());
  }
  return exit_code::ok;
}

}  // namespace

ParsedCommand parse_command(const std::vector<std::string>& args) {
  Command cmd;
  std::string index_list;
  CLI::App app{"Explicit iwip automorphisms realizing index lists", "iwip"};
  app.require_subcommand(1, 1);

  auto* realize_cmd = app.add_subcommand("realize", "Build and certify a map realizing an index list");
  realize_cmd->add_option("--rank,-n", cmd.rank, "Rank N of the free group")->required();
  realize_cmd->add_option("--index-list,-i", index_list, "Comma separated entries such as 1/2,1,3/2")->required();
  realize_cmd->add_option("--legalizing-cmax", cmd.legalizing.c_max, "Largest legalizing constant tried (0: 64 L)")
      ->check(CLI::NonNegativeNumber);
  realize_cmd->add_option("--max-rounds", cmd.legalizing.max_rounds, "Largest number of prepend rounds")
      ->check(CLI::PositiveNumber);
  add_output_flags(*realize_cmd, cmd);

  auto* certify_cmd = app.add_subcommand("certify", "Certify a realization or grade a train track map");
  certify_cmd->add_option("input,--in", cmd.input, "JSON document")->required();
  add_inp_flags(*certify_cmd, cmd);
  add_output_flags(*certify_cmd, cmd);

  auto* experiment_cmd = app.add_subcommand("experiment", "Index lists of random positive Nielsen products");
  experiment_cmd->add_option("--rank,-n", cmd.rank, "Number of rose petals")->required();
  experiment_cmd->add_option("--length,-L", cmd.length, "Elementary factors per sample")->check(CLI::PositiveNumber);
  experiment_cmd->add_option("--samples", cmd.samples, "Number of samples")->check(CLI::NonNegativeNumber);
  experiment_cmd->add_option("--seed", cmd.seed, "Master seed");
  experiment_cmd->add_option("--threads", cmd.threads, "Worker threads (0: all cores)");
  experiment_cmd->add_flag("--timing", cmd.timing, "Include elapsed time in JSON output");
  add_inp_flags(*experiment_cmd, cmd);
  add_output_flags(*experiment_cmd, cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every admissible index list for a rank");
  enumerate_cmd->add_option("--rank,-n", cmd.rank, "Rank N")->required();
  add_output_flags(*enumerate_cmd, cmd);

  std::vector<const char*> argv{"iwip"};
  for (const auto& a : args) argv.push_back(a.c_str());
  ParsedCommand parsed;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    parsed.exit_code = code == 0 ? exit_code::ok : exit_code::input_error;
    parsed.message = out.str() + err.str();
    return parsed;
  }

  if (realize_cmd->parsed()) {
    cmd.verb = Verb::Realize;
    try {
      cmd.index_list = parse_half_list(index_list);
    } catch (const InputError& e) {
      parsed.exit_code = exit_code::input_error;
      parsed.message = std::string("--index-list: ") + e.what() + "\n";
      return parsed;
    }
  } else if (certify_cmd->parsed()) {
    cmd.verb = Verb::Certify;
  } else if (experiment_cmd->parsed()) {
    cmd.verb = Verb::Experiment;
  } else {
    cmd.verb = Verb::Enumerate;
  }
  parsed.command = std::move(cmd);
  return parsed;
}

int execute_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Verb::Realize: return run_realize(cmd, out, err);
      case Verb::Certify: return run_certify(cmd, out);
      case Verb::Experiment: return run_experiment_verb(cmd, out);
      case Verb::Enumerate: return run_enumerate(cmd, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::io_error;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_code::input_error;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_code::input_error;
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_code::input_error;
  } catch (const MapError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_code::input_error;
  }
  return exit_code::input_error;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParsedCommand parsed = parse_command(args);
  if (!parsed.command) {
    (parsed.exit_code == exit_code::ok ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return execute_command(*parsed.command, out, err);
}

}  // namespace iwip
