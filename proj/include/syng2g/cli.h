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

#ifndef SYNG2G_CLI_H_
#define SYNG2G_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syng2g {

// Everything a subcommand needs, as parsed from the command line.
struct RunSpec {
  std::string subcommand;
  std::string config_path;
  std::map<std::string, std::string> overrides;  // --set key=value
  std::string train_path;
  std::string dev_path;
  std::string data_path;
  std::string gold_path;
  std::string pred_path;
  std::string checkpoint_path;
  std::string embeddings_path;
  std::string tokenizer = "identity";
  std::vector<std::string> pred_dirs;
  std::vector<std::string> names;
  std::string output_dir;
  std::string mode = "end-to-end";
  std::optional<uint64_t> seed;
  std::optional<std::string> variant;
  std::optional<std::string> style;
  std::optional<double> target_f1;
  // paramcount
  bool bert_large = false;
  // synth
  int sentences = 20;
};

// Output directory: --out, else $SYNG2G_OUTPUT_DIR, else "run".
std::string ResolveOutputDir(const RunSpec &run);

int CmdTrain(const RunSpec &run, std::ostream &out);
int CmdEval(const RunSpec &run, std::ostream &out);
int CmdDecode(const RunSpec &run, std::ostream &out);
int CmdAnalyze(const RunSpec &run, std::ostream &out, std::ostream &err);
int CmdParamCount(const RunSpec &run, std::ostream &out);
int CmdSynth(const RunSpec &run, std::ostream &out);

// Parses argv and dispatches. Returns the process exit status; errors are
// reported on `err`.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace syng2g

#endif  // SYNG2G_CLI_H_
