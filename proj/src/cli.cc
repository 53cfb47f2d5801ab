// Copyright 2026 The SynG2G Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "syng2g/cli.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "syng2g/checkpoint.h"
#include "syng2g/conll_io.h"
#include "syng2g/evaluate.h"
#include "syng2g/params.h"
#include "syng2g/synthetic.h"
#include "syng2g/trainer.h"

namespace syng2g {
namespace {

namespace fs = std::filesystem;

class PhaseTimer {
 public:
  void Start(const std::string &phase) {
    phase_ = phase;
    started_ = std::chrono::steady_clock::now();
  }
  void Stop() {
    timings_[phase_] = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - started_).count();
  }
  void Write(const fs::path &path) const {
    std::ofstream(path) << nlohmann::json(timings_).dump(2) << "\n";
  }

 private:
  std::string phase_;
  std::chrono::steady_clock::time_point started_;
  std::map<std::string, double> timings_;
};

void WriteFile(const fs::path &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

fs::path PrepareOutputDir(const RunSpec &run) {
  fs::path dir = ResolveOutputDir(run);
  fs::create_directories(dir);
  return dir;
}

void RequireFile(const std::string &path, const char *what) {
  if (path.empty()) throw Error(std::string("missing ") + what);
  if (!fs::exists(path)) throw Error(std::string(what) + " not found: " + path);
}

ModelConfig BuildConfig(const RunSpec &run,
                        const std::vector<CorpusRecord> *corpus) {
  std::map<std::string, std::string> values;
  if (!run.config_path.empty()) {
    RequireFile(run.config_path, "config file");
    std::ifstream in(run.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    values = ParseConfigText(buf.str());
  }
  for (const auto &[k, v] : run.overrides) values[k] = v;
  if (run.variant) values["variant"] = *run.variant;
  if (run.style) values["srl_style"] = *run.style;
  if (run.seed) values["seed"] = std::to_string(*run.seed);
  if (!values.count("srl_style") && corpus != nullptr && !corpus->empty()) {
    bool all_dependency = true;
    for (const CorpusRecord &r : *corpus) {
      all_dependency = all_dependency && r.gold_srl.style == SrlStyle::kDependency;
    }
    values["srl_style"] = all_dependency ? "dependency" : "span";
  }
  ModelConfig config;
  ApplyConfigValues(values, &config);
  return config;
}

void WriteReport(const fs::path &dir, const EvalReport &report) {
  WriteFile(dir / "metrics.json", report.ToJson());
  WriteFile(dir / "metrics.csv", report.ToCsv());
  WriteFile(dir / "sentence_length.csv",
            BinComparisonCsv({"model"}, {report.bins.sentence_length}));
  WriteFile(dir / "dependency_length.csv",
            BinComparisonCsv({"model"}, {report.bins.dependency_length}));
}

void PrintScores(std::ostream &out, const std::string &label,
                 const TupleCounts &counts) {
  Prf s = counts.Score();
  out << std::fixed << std::setprecision(4) << label << ": P=" << s.precision
      << " R=" << s.recall << " F1=" << s.f1 << " (correct " << counts.correct
      << ", predicted " << counts.predicted << ", gold " << counts.gold << ")\n";
  out.unsetf(std::ios::fixed);
}

std::vector<CorpusRecord> WithPredictions(std::vector<CorpusRecord> records,
                                          const std::vector<SrlGraph> &preds) {
  for (size_t i = 0; i < records.size(); ++i) records[i].gold_srl = preds[i];
  return records;
}

}  // namespace

std::string ResolveOutputDir(const RunSpec &run) {
  if (!run.output_dir.empty()) return run.output_dir;
  if (const char *env = std::getenv("SYNG2G_OUTPUT_DIR"); env && *env) return env;
  return "run";
}

int CmdTrain(const RunSpec &run, std::ostream &out) {
  PhaseTimer timer;
  timer.Start("load");
  RequireFile(run.train_path, "training data");
  std::vector<CorpusRecord> train = ReadCorpus(run.train_path);
  if (train.empty()) throw Error("training data is empty: " + run.train_path);
  std::vector<CorpusRecord> dev;
  if (!run.dev_path.empty()) {
    RequireFile(run.dev_path, "dev data");
    dev = ReadCorpus(run.dev_path);
  }
  ModelConfig config = BuildConfig(run, &train);
  std::unique_ptr<Tokenizer> tokenizer = MakeTokenizer(run.tokenizer);
  Vocabulary vocab = BuildVocab(train, *tokenizer);
  Model model(config, vocab, run.tokenizer);
  if (!run.embeddings_path.empty()) {
    RequireFile(run.embeddings_path, "embeddings file");
    int n = LoadExternalEmbeddings(&model, run.embeddings_path);
    out << "loaded " << n << " external embedding rows\n";
  }
  timer.Stop();

  fs::path dir = PrepareOutputDir(run);
  WriteFile(dir / "config.txt", FormatConfig(model.config()));
  SaveVocabulary(model.vocab(), (dir / "vocab").string());

  timer.Start("train");
  std::ofstream log(dir / "train_log.csv");
  TrainOptions options;
  options.log = &log;
  options.target_f1 = run.target_f1;
  if (!dev.empty()) options.dev = &dev;
  TrainState state = Train(&model, train, options);
  timer.Stop();

  timer.Start("evaluate_train");
  EvalReport report = EvaluateModel(&model, train, PredicateMode::kEndToEnd);
  timer.Stop();
  SaveCheckpoint(model, (dir / "model.ckpt").string());
  WriteFile(dir / "train_metrics.json", report.ToJson());
  timer.Write(dir / "timing.json");

  out << "trained " << VariantName(model.config().variant) << " for "
      << state.epoch << " epochs (" << state.steps << " steps)";
  if (options.dev) out << ", best dev F1 " << state.best_dev_f1;
  out << "\n";
  PrintScores(out, "train", report.overall);
  out << "checkpoint: " << (dir / "model.ckpt").string() << "\n";
  return 0;
}

int CmdEval(const RunSpec &run, std::ostream &out) {
  const PredicateMode mode = ParseMode(run.mode);
  EvalReport report;
  std::vector<SrlGraph> predictions;
  PhaseTimer timer;
  if (!run.pred_path.empty()) {
    RequireFile(run.pred_path, "prediction file");
    RequireFile(run.gold_path, "gold file");
    std::vector<CorpusRecord> pred = ReadCorpus(run.pred_path);
    std::vector<CorpusRecord> gold = ReadCorpus(run.gold_path);
    for (const CorpusRecord &r : pred) predictions.push_back(r.gold_srl);
    report = Evaluate(predictions, gold, mode);
  } else {
    RequireFile(run.checkpoint_path, "checkpoint");
    const std::string data = run.data_path.empty() ? run.gold_path : run.data_path;
    RequireFile(data, "evaluation data");
    Model model = LoadCheckpoint(run.checkpoint_path);
    std::vector<CorpusRecord> gold = ReadCorpus(data);
    timer.Start("evaluate");
    report = EvaluateModel(&model, gold, mode);
    timer.Stop();
  }
  fs::path dir = PrepareOutputDir(run);
  WriteReport(dir, report);
  if (run.pred_path.empty()) timer.Write(dir / "timing.json");
  PrintScores(out, std::string(ModeName(mode)), report.overall);
  if (report.gold_recall >= 0) {
    out << "gold recall after pruning: " << report.gold_recall << "\n";
  }
  return 0;
}

int CmdDecode(const RunSpec &run, std::ostream &out) {
  RequireFile(run.checkpoint_path, "checkpoint");
  RequireFile(run.data_path, "input data");
  const PredicateMode mode = ParseMode(run.mode);
  Model model = LoadCheckpoint(run.checkpoint_path);
  std::vector<CorpusRecord> records = ReadCorpus(run.data_path);
  PhaseTimer timer;
  timer.Start("decode");
  std::vector<PreparedExample> examples;
  for (const CorpusRecord &r : records) examples.push_back(model.Prepare(r));
  std::vector<SrlGraph> preds = PredictAll(&model, examples, mode);
  timer.Stop();

  fs::path dir = PrepareOutputDir(run);
  WriteJsonlFile((dir / "predictions.jsonl").string(), WithPredictions(records, preds));
  if (model.config().style == SrlStyle::kDependency) {
    std::ofstream conll(dir / "predictions.conll");
    WriteConll2009(conll, records, preds);
  }
  timer.Write(dir / "timing.json");
  out << "decoded " << records.size() << " sentences to "
      << (dir / "predictions.jsonl").string() << "\n";
  return 0;
}

int CmdAnalyze(const RunSpec &run, std::ostream &out, std::ostream &err) {
  RequireFile(run.gold_path, "gold file");
  if (run.pred_dirs.empty()) throw Error("analyze needs at least one --pred-dir");
  if (!run.names.empty() && run.names.size() != run.pred_dirs.size()) {
    throw Error("--name must be given once per --pred-dir");
  }
  std::vector<CorpusRecord> gold = ReadCorpus(run.gold_path);
  std::vector<std::string> names;
  std::vector<BinTable> by_length, by_distance;
  for (size_t i = 0; i < run.pred_dirs.size(); ++i) {
    fs::path file = fs::path(run.pred_dirs[i]) / "predictions.jsonl";
    RequireFile(file.string(), "predictions");
    std::vector<CorpusRecord> pred = ReadJsonlFile(file.string());
    if (pred.empty()) {
      err << "warning: empty prediction set in " << run.pred_dirs[i] << "\n";
      continue;
    }
    std::vector<SrlGraph> graphs;
    for (const CorpusRecord &r : pred) graphs.push_back(r.gold_srl);
    ErrorBins bins = ComputeErrorBins(graphs, gold);
    names.push_back(run.names.empty()
                        ? fs::path(run.pred_dirs[i]).filename().string()
                        : run.names[i]);
    by_length.push_back(bins.sentence_length);
    by_distance.push_back(bins.dependency_length);
  }
  fs::path dir = PrepareOutputDir(run);
  std::string length_csv = BinComparisonCsv(names, by_length);
  std::string distance_csv = BinComparisonCsv(names, by_distance);
  if (names.empty()) {
    std::ostringstream l, d;
    l << "model";
    for (const auto &b : SentenceLengthBins()) l << ',' << b;
    d << "model";
    for (const auto &b : DependencyLengthBins()) d << ',' << b;
    length_csv = l.str() + "\n";
    distance_csv = d.str() + "\n";
  }
  WriteFile(dir / "sentence_length.csv", length_csv);
  WriteFile(dir / "dependency_length.csv", distance_csv);
  if (!names.empty()) {
    WriteFile(dir / "sentence_length.svg",
              BinComparisonSvg("F1 by sentence length", names, by_length));
    WriteFile(dir / "dependency_length.svg",
              BinComparisonSvg("F1 by dependency length", names, by_distance));
  }
  out << "F1 by sentence length\n" << length_csv
      << "F1 by dependency length\n" << distance_csv;
  return 0;
}

int CmdParamCount(const RunSpec &run, std::ostream &out) {
  RunSpec spec = run;
  if (spec.bert_large) {
    std::map<std::string, std::string> preset = {
        {"num_layers", "24"},      {"num_heads", "16"},
        {"embedding_size", "1024"}, {"feed_forward_size", "4096"},
        {"num_subwords", "30522"}, {"num_syn_labels", "47"}};
    for (const auto &[k, v] : run.overrides) preset[k] = v;
    spec.overrides = preset;
  }
  ModelConfig config = BuildConfig(spec, nullptr);
  config.Validate();
  const AddedParamCount formula = CountAddedParams(config);
  const AddedParamCount enumerated = EnumerateAddedParams(config);
  ModelConfig plain = config;
  plain.variant = Variant::kPlain;
  const int64_t base = CountParams(plain);

  std::ostringstream table;
  table << "model,general,added,enumerated_added,total\n"
        << "Plain,Theta,0,0," << base << "\n"
        << "SynEmb,+(|L_syn|+1)*d_x," << formula.synemb << ","
        << enumerated.synemb << "," << base + enumerated.synemb << "\n"
        << "SynG2G,+(2|L_syn|+1)*m*d," << formula.syng2g << ","
        << enumerated.syng2g << "," << base + enumerated.syng2g << "\n";
  out << "|L_syn|=" << config.num_syn_labels << " m=" << config.num_layers
      << " d=" << config.head_size() << " d_x=" << config.hidden_size << "\n"
      << table.str();
  fs::path dir = PrepareOutputDir(run);
  WriteFile(dir / "paramcount.csv", table.str());
  WriteFile(dir / "config.txt", FormatConfig(config));
  return formula == enumerated ? 0 : 1;
}

int CmdSynth(const RunSpec &run, std::ostream &out) {
  const SrlStyle style = ParseStyle(run.style.value_or("span"));
  std::vector<CorpusRecord> corpus =
      SyntheticCorpus(run.sentences, style, run.seed.value_or(1));
  fs::path dir = PrepareOutputDir(run);
  fs::path path = dir / (std::string("synthetic_") + StyleName(style) + ".jsonl");
  WriteJsonlFile(path.string(), corpus);
  if (style == SrlStyle::kDependency) {
    std::vector<SrlGraph> graphs;
    for (const CorpusRecord &r : corpus) graphs.push_back(r.gold_srl);
    std::ofstream conll(dir / "synthetic_dependency.conll");
    WriteConll2009(conll, corpus, graphs);
  }
  out << "wrote " << corpus.size() << " sentences to " << path.string() << "\n";
  return 0;
}

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Syntax-aware graph-to-graph Transformer for semantic role labelling"};
  app.require_subcommand(1);
  RunSpec run;
  std::vector<std::string> sets;
  uint64_t seed = 0;
  std::string variant, style;
  double target_f1 = 0.0;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--out", run.output_dir,
                    "Output directory (default $SYNG2G_OUTPUT_DIR or ./run)");
  };
  auto add_model_flags = [&](CLI::App *cmd) {
    cmd->add_option("--config", run.config_path, "Key/value config file");
    cmd->add_option("--set", sets, "Config override key=value (repeatable)");
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--variant", variant, "SynG2G, SynG2G-key, SynEmb or Plain");
    cmd->add_option("--style", style, "span or dependency");
  };

  CLI::App *train = app.add_subcommand("train", "Train a model");
  add_common(train);
  add_model_flags(train);
  train->add_option("--train", run.train_path, "Training data (.jsonl or CoNLL-2009)")
      ->required();
  train->add_option("--dev", run.dev_path, "Dev data for early stopping");
  train->add_option("--tokenizer", run.tokenizer, "identity or wordpiece:<file>");
  train->add_option("--embeddings", run.embeddings_path,
                    "Text file of external token embeddings");
  train->add_option("--target-f1", target_f1, "Stop once dev F1 reaches this");

  CLI::App *eval = app.add_subcommand("eval", "Score a model or a prediction file");
  add_common(eval);
  eval->add_option("--checkpoint", run.checkpoint_path, "Model checkpoint");
  eval->add_option("--data", run.data_path, "Gold data to decode and score");
  eval->add_option("--gold", run.gold_path, "Gold file");
  eval->add_option("--pred", run.pred_path, "Prediction file to score against --gold");
  eval->add_option("--mode", run.mode, "end-to-end or predefined");

  CLI::App *decode = app.add_subcommand("decode", "Predict SRL graphs");
  add_common(decode);
  decode->add_option("--checkpoint", run.checkpoint_path, "Model checkpoint")->required();
  decode->add_option("--data", run.data_path, "Input data")->required();
  decode->add_option("--mode", run.mode, "end-to-end or predefined");

  CLI::App *analyze = app.add_subcommand("analyze", "Error analysis by length bins");
  add_common(analyze);
  analyze->add_option("--gold", run.gold_path, "Gold file")->required();
  analyze->add_option("--pred-dir", run.pred_dirs,
                      "Directory holding predictions.jsonl (repeatable)")
      ->required();
  analyze->add_option("--name", run.names, "Series name per --pred-dir");

  CLI::App *paramcount = app.add_subcommand("paramcount", "Added-parameter table");
  add_common(paramcount);
  add_model_flags(paramcount);
  paramcount->add_flag("--bert-large", run.bert_large,
                       "24 layers, 16 heads, 1024 dims, 47 labels");

  CLI::App *synth = app.add_subcommand("synth", "Write a synthetic corpus");
  add_common(synth);
  synth->add_option("--sentences", run.sentences, "Number of sentences");
  synth->add_option("--seed", seed, "Random seed");
  synth->add_option("--style", style, "span or dependency");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }
  for (const std::string &s : sets) {
    size_t eq = s.find('=');
    if (eq == std::string::npos) {
      err << "error: --set expects key=value, got '" << s << "'\n";
      return 2;
    }
    run.overrides[s.substr(0, eq)] = s.substr(eq + 1);
  }
  for (CLI::App *cmd : {train, paramcount, synth}) {
    if (cmd->parsed() && cmd->count("--seed")) run.seed = seed;
    if (cmd->parsed() && cmd->count("--style")) run.style = style;
  }
  if (train->parsed() || paramcount->parsed()) {
    CLI::App *cmd = train->parsed() ? train : paramcount;
    if (cmd->count("--variant")) run.variant = variant;
  }
  if (train->parsed() && train->count("--target-f1")) run.target_f1 = target_f1;

  try {
    if (train->parsed()) return CmdTrain(run, out);
    if (eval->parsed()) return CmdEval(run, out);
    if (decode->parsed()) return CmdDecode(run, out);
    if (analyze->parsed()) return CmdAnalyze(run, out, err);
    if (paramcount->parsed()) return CmdParamCount(run, out);
    if (synth->parsed()) return CmdSynth(run, out);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace syng2g
