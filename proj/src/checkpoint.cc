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

#include "syng2g/checkpoint.h"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace syng2g {
namespace {

constexpr char kMagic[] = "SYNG2G-CHECKPOINT 1";

static_assert(std::endian::native == std::endian::little,
              "checkpoint IO assumes a little-endian host");

}  // namespace

void SaveCheckpoint(const Model &model, std::ostream &out) {
  nlohmann::json header;
  header["config"] = ConfigToMap(model.config());
  header["tokenizer"] = model.tokenizer_spec();
  const Vocabulary &v = model.vocab();
  header["vocab"] = {{"subwords", v.subwords.tokens()},
                     {"pos_tags", v.pos_tags.tokens()},
                     {"syn_labels", v.syn_labels.tokens()},
                     {"srl_labels", v.srl_labels.tokens()}};
  nlohmann::json tensors = nlohmann::json::array();
  for (const Parameter &p : model.params().tensors) {
    tensors.push_back({{"name", p.name}, {"rows", p.value.rows()},
                       {"cols", p.value.cols()}});
  }
  header["tensors"] = tensors;
  const std::string text = header.dump();
  out << kMagic << '\n' << text.size() << '\n' << text;
  for (const Parameter &p : model.params().tensors) {
    out.write(reinterpret_cast<const char *>(p.value.data()),
              static_cast<std::streamsize>(p.value.size() * sizeof(double)));
  }
  if (!out) throw Error("failed writing checkpoint");
}

void SaveCheckpoint(const Model &model, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write checkpoint " + path);
  SaveCheckpoint(model, out);
}

Model LoadCheckpoint(std::istream &in) {
  std::string magic, length_line;
  std::getline(in, magic);
  if (magic != kMagic) throw Error("not a checkpoint (bad magic)");
  std::getline(in, length_line);
  const size_t length = std::stoul(length_line);
  std::string text(length, '\0');
  in.read(text.data(), static_cast<std::streamsize>(length));
  if (!in) throw Error("truncated checkpoint header");
  nlohmann::json header = nlohmann::json::parse(text);

  ModelConfig config;
  ApplyConfigValues(header["config"].get<std::map<std::string, std::string>>(),
                    &config);
  Vocabulary vocab;
  const auto &jv = header["vocab"];
  vocab.subwords = Lexicon(jv["subwords"].get<std::vector<std::string>>());
  vocab.pos_tags = Lexicon(jv["pos_tags"].get<std::vector<std::string>>());
  vocab.syn_labels = Lexicon(jv["syn_labels"].get<std::vector<std::string>>());
  vocab.srl_labels = Lexicon(jv["srl_labels"].get<std::vector<std::string>>());

  ModelParams params = CreateParams(config, config.seed);
  const auto &tensors = header["tensors"];
  if (tensors.size() != params.tensors.size()) {
    throw Error("checkpoint tensor count does not match its config");
  }
  for (const auto &t : tensors) {
    const std::string name = t["name"].get<std::string>();
    int id = params.Find(name);
    if (id < 0) throw Error("checkpoint has unexpected tensor '" + name + "'");
    Parameter &p = params[id];
    if (p.value.rows() != t["rows"].get<Eigen::Index>() ||
        p.value.cols() != t["cols"].get<Eigen::Index>()) {
      throw Error("checkpoint tensor '" + name + "' has the wrong shape");
    }
    in.read(reinterpret_cast<char *>(p.value.data()),
            static_cast<std::streamsize>(p.value.size() * sizeof(double)));
    if (!in) throw Error("truncated checkpoint data for '" + name + "'");
    p.ZeroGrad();
  }
  return Model(config, std::move(vocab), header["tokenizer"].get<std::string>(),
               std::move(params));
}

Model LoadCheckpoint(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open checkpoint " + path);
  return LoadCheckpoint(in);
}

}  // namespace syng2g
