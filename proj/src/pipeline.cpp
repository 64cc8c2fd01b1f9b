#include "t2p/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "t2p/errors.hpp"
#include "t2p/extractor.hpp"
#include "t2p/generator.hpp"
#include "t2p/json_io.hpp"
#include "t2p/layout.hpp"
#include "t2p/rng.hpp"
#include "t2p/svg.hpp"

namespace t2p {

namespace fs = std::filesystem;

Lexicon load_lexicon(const PipelineConfig& config) {
  if (config.lexicon_path.empty()) return Lexicon::defaults();
  return Lexicon::load(config.lexicon_path);
}

void apply_config_file(PipelineConfig& config, const fs::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoError, "cannot read config " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      raise(Errc::FormatMismatch, path.string() + ":" + std::to_string(lineno) +
                                      ": expected key=value");
    std::string key = line.substr(b, eq - b);
    std::string value = line.substr(eq + 1);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.pop_back();
    auto bad_value = [&]() {
      raise(Errc::FormatMismatch, path.string() + ":" + std::to_string(lineno) +
                                      ": bad value for " + key);
    };
    if (key == "ratio") {
      config.reduction_ratio = std::stod(value);
    } else if (key == "seed") {
      config.seed = std::stoull(value);
    } else if (key == "classifier") {
      if (value == "rule")
        config.classifier = ClassifierMode::Rule;
      else if (value == "cnn")
        config.classifier = ClassifierMode::Cnn;
      else
        bad_value();
    } else if (key == "centrality") {
      if (value == "degree")
        config.centrality = Centrality::WeightedDegree;
      else if (value == "pagerank")
        config.centrality = Centrality::PowerIteration;
      else
        bad_value();
    } else if (key == "strict") {
      config.strict = value == "1" || value == "true";
    } else if (key == "keep_partial") {
      config.keep_partial = value == "1" || value == "true";
    } else if (key == "out") {
      config.output_dir = value;
    } else if (key == "model") {
      config.model_path = value;
    } else if (key == "lexicon") {
      config.lexicon_path = value;
    } else {
      raise(Errc::FormatMismatch,
            path.string() + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

const char* to_string(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::Text: return "plain text description";
    case ArtifactKind::LabelsTsv: return "labels.tsv";
    case ArtifactKind::RoomsJson: return "rooms.json";
    case ArtifactKind::DcgJson: return "dcg.json";
    case ArtifactKind::PlanJson: return "plan.json";
    case ArtifactKind::Svg: return "svg document";
  }
  return "unknown";
}

ArtifactKind sniff_artifact(const std::string& content) {
  auto b = content.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return ArtifactKind::Text;
  char first = content[b];
  if (first == '<') return ArtifactKind::Svg;
  if (first == '[' || first == '{') {
    try {
      auto j = nlohmann::json::parse(content);
      if (j.is_array()) return ArtifactKind::RoomsJson;
      if (j.is_object()) {
        if (j.contains("rooms") && j.contains("doors")) return ArtifactKind::PlanJson;
        if (j.contains("nodes") && j.contains("edges")) return ArtifactKind::DcgJson;
      }
    } catch (const nlohmann::json::exception&) {
      // fall through to text
    }
    return ArtifactKind::Text;
  }
  // integer <TAB> ... <TAB> ... lines
  std::istringstream in(content);
  std::string line;
  bool any = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (std::count(line.begin(), line.end(), '\t') < 2) return ArtifactKind::Text;
    if (!std::isdigit(static_cast<unsigned char>(line[0]))) return ArtifactKind::Text;
    any = true;
  }
  return any ? ArtifactKind::LabelsTsv : ArtifactKind::Text;
}

namespace {

// Corpus stats for scoring: a trained model carries its training-corpus
// stats; without one, each input sentence is treated as its own document.
CorpusStats scoring_stats(const std::vector<Sentence>& sentences,
                          const PipelineConfig& config) {
  if (!config.model_path.empty()) return ModelBundle::load(config.model_path).stats;
  std::vector<TokenizedDoc> pseudo_docs;
  for (const auto& s : sentences)
    if (!s.tokens.empty()) pseudo_docs.push_back({s.tokens});
  if (pseudo_docs.empty()) raise(Errc::EmptyDocument, "no tokens to score");
  return build_corpus_stats(pseudo_docs);
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", w);
  return buf;
}

std::vector<Sentence> read_summary_sentences(const fs::path& summary_txt, const Lexicon& lex) {
  std::string content = read_file(summary_txt);
  std::vector<Sentence> sentences;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Sentence s;
    s.index = sentences.size();
    s.raw = line;
    s.tokens = tokenize(line, lex);
    sentences.push_back(std::move(s));
  }
  return sentences;
}

}  // namespace

void stage_summarize(const fs::path& input_text, const PipelineConfig& config,
                     Diagnostics& diags) {
  Lexicon lex = load_lexicon(config);
  std::string text = read_file(input_text);
  std::vector<Sentence> all = split_sentences(text, lex);
  std::vector<Sentence> scored;
  for (const auto& s : all)
    if (!s.tokens.empty()) scored.push_back(s);
  if (scored.size() != all.size())
    diags.add("summarize", Severity::Warning,
              std::to_string(all.size() - scored.size()) + " token-less sentence(s) dropped");
  if (scored.empty()) raise(Errc::EmptyDocument, "no sentence survives preprocessing");

  CorpusStats stats = scoring_stats(scored, config);
  ScoringParams params;
  SummarizerOptions options;
  options.centrality = config.centrality;
  SimilarityGraph graph = build_similarity_graph(scored, stats, params, options, &lex);
  std::vector<std::size_t> ranked = rank_sentences(graph, options.centrality);

  std::size_t keep = static_cast<std::size_t>(
      std::ceil(config.reduction_ratio * static_cast<double>(scored.size())));
  keep = std::max<std::size_t>(1, std::min(keep, scored.size()));
  std::vector<std::size_t> selected(ranked.begin(), ranked.begin() + static_cast<long>(keep));
  std::sort(selected.begin(), selected.end());

  std::string summary;
  for (std::size_t idx : selected)
    for (const auto& s : scored)
      if (s.index == idx) summary += s.raw + "\n";

  std::string scores;
  for (const auto& [key, w] : graph.edge_weight)
    scores += std::to_string(key.first) + "\t" + std::to_string(key.second) + "\t" +
              format_weight(w) + "\n";

  write_file(config.output_dir / "summary.txt", summary);
  write_file(config.output_dir / "scores.tsv", scores);
}

void stage_classify(const fs::path& summary_txt, const PipelineConfig& config,
                    Diagnostics& diags) {
  Lexicon lex = load_lexicon(config);
  std::vector<Sentence> sentences = read_summary_sentences(summary_txt, lex);

  std::vector<SentenceLabel> labels;
  if (config.classifier == ClassifierMode::Cnn) {
    if (config.model_path.empty())
      raise(Errc::FormatMismatch, "classifier mode cnn requires --model");
    ModelBundle bundle = ModelBundle::load(config.model_path);
    for (const auto& s : sentences) labels.push_back(classify_sentence(bundle, s));
  } else {
    for (const auto& s : sentences) labels.push_back(rule_based_classify(s, lex));
  }
  std::size_t unlabeled = 0;
  for (const auto& l : labels)
    if (l.room_tags.empty() && !l.is_relation) ++unlabeled;
  if (unlabeled > 0)
    diags.add("classify", Severity::Warning,
              std::to_string(unlabeled) + " sentence(s) received no label");

  write_file(config.output_dir / "labels.tsv", labels_to_tsv(labels));
}

void stage_extract(const fs::path& summary_txt, const fs::path& labels_tsv,
                   const PipelineConfig& config, Diagnostics& diags) {
  Lexicon lex = load_lexicon(config);
  std::vector<Sentence> sentences = read_summary_sentences(summary_txt, lex);
  std::vector<SentenceLabel> labels = labels_from_tsv(read_file(labels_tsv));

  RoomClusters clusters = cluster_by_room(labels, sentences, config.strict, &diags);

  std::vector<RoomSpec> rooms;
  for (RoomType type : kRoomTypes) {
    auto it = clusters.rooms.find(type);
    if (it == clusters.rooms.end()) continue;
    rooms.push_back(extract_room_spec(type, it->second, lex, &diags, config.strict));
  }
  if (rooms.empty())
    diags.add("extract", Severity::Warning, "no room clusters found; plan will be empty");

  std::vector<Relation> relations = extract_relations(clusters.relations, lex, &diags);
  DoorConnectivityGraph dcg = build_dcg(rooms, relations, &diags);

  write_file(config.output_dir / "rooms.json", rooms_to_json(rooms));
  write_file(config.output_dir / "dcg.json", dcg_to_json(dcg));
}

void stage_layout(const fs::path& rooms_json, const fs::path& dcg_json,
                  const PipelineConfig& config, Diagnostics& diags) {
  std::vector<RoomSpec> rooms = rooms_from_json(read_file(rooms_json));
  DoorConnectivityGraph dcg = dcg_from_json(read_file(dcg_json));
  LayoutResult result = dfs_place(dcg, rooms, config.seed, LayoutConfig::defaults(),
                                  config.strict);
  diags.merge(result.diags);
  write_file(config.output_dir / "plan.json", plan_to_json(result.plan));
}

void stage_render(const fs::path& plan_json, const PipelineConfig& config, Diagnostics& diags) {
  (void)diags;
  FloorPlan plan = plan_from_json(read_file(plan_json));
  write_file(config.output_dir / "plan.svg", render_svg(plan));
}

void run_render(const fs::path& input_text, const PipelineConfig& config, Diagnostics& diags) {
  fs::create_directories(config.output_dir);
  const fs::path out = config.output_dir;
  std::vector<fs::path> written;
  auto track = [&](const char* name) { written.push_back(out / name); };
  try {
    stage_summarize(input_text, config, diags);
    track("summary.txt");
    track("scores.tsv");
    stage_classify(out / "summary.txt", config, diags);
    track("labels.tsv");
    stage_extract(out / "summary.txt", out / "labels.tsv", config, diags);
    track("rooms.json");
    track("dcg.json");
    stage_layout(out / "rooms.json", out / "dcg.json", config, diags);
    track("plan.json");
    stage_render(out / "plan.json", config, diags);
  } catch (...) {
    if (!config.keep_partial)
      for (const auto& p : written) fs::remove(p);
    throw;
  }
}

TrainOutcome run_train(const fs::path& corpus_dir, const fs::path& model_out,
                       const PipelineConfig& config, Diagnostics& diags) {
  Lexicon lex = load_lexicon(config);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (!entry.is_regular_file()) continue;
    fs::path p = entry.path();
    if (p.extension() == ".txt" && p.string().find(".labels.") == std::string::npos)
      files.push_back(p);
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) raise(Errc::EmptyCorpus, "no .txt documents in " + corpus_dir.string());

  std::vector<TokenizedDoc> docs;
  std::vector<std::vector<std::string>> all_tokens;  // flattened sentences
  std::vector<std::set<std::string>> all_labels;
  for (const auto& file : files) {
    fs::path labels_path = file;
    labels_path.replace_extension(".labels.tsv");
    if (!fs::exists(labels_path))
      raise(Errc::FormatMismatch, "missing labels file " + labels_path.string());

    std::vector<Sentence> sentences = split_sentences(read_file(file), lex);
    std::map<std::size_t, std::set<std::string>> labels;
    std::istringstream in(read_file(labels_path));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos)
        raise(Errc::FormatMismatch, labels_path.string() + ": expected index<TAB>labels");
      std::size_t idx = std::stoull(line.substr(0, tab));
      std::set<std::string> tags;
      std::istringstream tag_in(line.substr(tab + 1));
      std::string tag;
      while (std::getline(tag_in, tag, ',')) {
        if (!tag.empty() && tag.back() == '\r') tag.pop_back();
        if (!tag.empty()) tags.insert(tag);
      }
      labels[idx] = std::move(tags);
    }

    TokenizedDoc doc;
    for (const auto& s : sentences) {
      doc.push_back(s.tokens);
      auto it = labels.find(s.index);
      all_tokens.push_back(s.tokens);
      all_labels.push_back(it == labels.end() ? std::set<std::string>{} : it->second);
    }
    docs.push_back(std::move(doc));
  }

  CorpusStats stats = build_corpus_stats(docs);
  SkipGramParams embed_params;
  EmbeddingTable table = train_embeddings(docs, embed_params, config.seed);

  ConvHyperparams hyper;
  std::vector<std::vector<double>> inputs;
  inputs.reserve(all_tokens.size());
  for (const auto& tokens : all_tokens)
    inputs.push_back(embed_sentence(tokens, table, hyper.max_len));

  // 80/20 split, fixed by the seed
  std::vector<std::size_t> order(inputs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(config.seed ^ 0x747261696eULL);
  rng.shuffle(order);
  std::size_t train_count = (order.size() * 8) / 10;
  if (train_count == 0 || train_count == order.size())
    raise(Errc::EmptyCorpus, "corpus too small for an 80/20 split");

  const char* head_names[] = {"bedroom", "kitchen", "bathroom", "hall", "dining", "relation"};
  ModelBundle bundle;
  bundle.embeddings = std::move(table);
  bundle.stats = std::move(stats);
  TrainOutcome outcome;
  outcome.sentence_count = static_cast<int>(inputs.size());

  for (const char* name : head_names) {
    std::vector<std::vector<double>> train_x;
    std::vector<int> train_y;
    for (std::size_t k = 0; k < train_count; ++k) {
      train_x.push_back(inputs[order[k]]);
      train_y.push_back(all_labels[order[k]].count(name) ? 1 : 0);
    }
    ConvTextModel model = train_binary(train_x, train_y, hyper, config.seed);

    int correct = 0, total = 0;
    for (std::size_t k = train_count; k < order.size(); ++k) {
      int want = all_labels[order[k]].count(name) ? 1 : 0;
      int got = model.forward(inputs[order[k]])[1] >= bundle.threshold ? 1 : 0;
      correct += want == got ? 1 : 0;
      ++total;
    }
    double accuracy = total > 0 ? static_cast<double>(correct) / total : 0.0;
    outcome.held_out_accuracy[name] = accuracy;
    diags.add("train", Severity::Info,
              std::string(name) + " held-out accuracy " + format_weight(accuracy));
    bundle.heads[name] = std::move(model);
  }

  bundle.save(model_out);
  return outcome;
}

void run_gen_corpus(int n, std::uint64_t seed, const fs::path& out_dir) {
  if (n < 1) raise(Errc::UnsupportedSize, "corpus size must be at least 1");
  fs::create_directories(out_dir);
  Rng master(seed);
  for (int i = 0; i < n; ++i) {
    std::uint64_t doc_seed = master.next_u64();
    int size = 2 + static_cast<int>(master.below(4));
    GeneratedDescription gen = generate_description(doc_seed, size);

    char name[32];
    std::snprintf(name, sizeof(name), "desc_%04d", i);
    write_file(out_dir / (std::string(name) + ".txt"), gen.text + "\n");

    std::string labels;
    for (std::size_t s = 0; s < gen.labels.size(); ++s) {
      labels += std::to_string(s) + "\t";
      for (std::size_t k = 0; k < gen.labels[s].size(); ++k) {
        if (k > 0) labels += ",";
        labels += gen.labels[s][k];
      }
      labels += "\n";
    }
    write_file(out_dir / (std::string(name) + ".labels.tsv"), labels);
    write_file(out_dir / (std::string(name) + ".truth.json"), truth_to_json(gen.truth));
  }
}

}  // namespace t2p
