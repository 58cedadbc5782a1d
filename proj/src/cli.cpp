#include "eraskit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eraskit/errors.hpp"
#include "eraskit/measurements.hpp"
#include "eraskit/parser.hpp"
#include "eraskit/relations.hpp"
#include "eraskit/report.hpp"

namespace eraskit {

namespace {

using nlohmann::json;

struct DocSourceOpts {
  std::string doc_path;
  std::string inline_text;
  bool has_inline_text = false;
  std::string corpus_path;
  std::string format;  // "txt-dir" | "jsonl" | "" (infer from path)
};

void add_source_options(CLI::App* cmd, DocSourceOpts& src) {
  auto* doc = cmd->add_option("--doc", src.doc_path, "Read one document from a text file");
  auto* text = cmd->add_option_function<std::string>(
      "--text",
      [&src](const std::string& value) {
        src.inline_text = value;
        src.has_inline_text = true;  // empty string is a valid (empty) document
      },
      "Use the given string as the document");
  auto* corpus = cmd->add_option("--corpus", src.corpus_path, "Corpus path (directory or JSONL file)");
  cmd->add_option("--format", src.format, "Corpus format: txt-dir or jsonl (default: inferred)")
      ->check(CLI::IsMember({"txt-dir", "jsonl"}));
  doc->excludes(text)->excludes(corpus);
  text->excludes(corpus);
}

CorpusFormat resolve_format(const DocSourceOpts& src) {
  if (src.format == "txt-dir") return CorpusFormat::TxtDir;
  if (src.format == "jsonl") return CorpusFormat::Jsonl;
  std::error_code ec;
  return std::filesystem::is_directory(src.corpus_path, ec) ? CorpusFormat::TxtDir
                                                            : CorpusFormat::Jsonl;
}

Document read_single_document(const DocSourceOpts& src, const TokenizerConfig& tokenizer) {
  if (src.has_inline_text) return tokenize(src.inline_text, tokenizer, "inline");
  std::ifstream in(src.doc_path);
  if (!in) throw IoError("cannot read file: " + src.doc_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return tokenize(buffer.str(), tokenizer,
                  std::filesystem::path(src.doc_path).stem().string());
}

/// --doc/--text yield a single-document corpus so corpus commands accept
/// any source.
Corpus resolve_corpus(const DocSourceOpts& src, const TokenizerConfig& tokenizer) {
  if (!src.corpus_path.empty()) {
    return load_corpus(src.corpus_path, resolve_format(src), tokenizer);
  }
  if (src.doc_path.empty() && !src.has_inline_text) {
    throw CLI::ValidationError("one of --doc, --text or --corpus is required");
  }
  std::vector<Document> docs;
  docs.push_back(read_single_document(src, tokenizer));
  return make_corpus(std::move(docs));
}

Document resolve_document(const DocSourceOpts& src, const TokenizerConfig& tokenizer) {
  if (!src.corpus_path.empty()) {
    throw CLI::ValidationError("this command takes a single document (--doc or --text)");
  }
  if (src.doc_path.empty() && !src.has_inline_text) {
    throw CLI::ValidationError("one of --doc or --text is required");
  }
  return read_single_document(src, tokenizer);
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw IoError("config: invalid boolean for " + key + ": " + value);
}

/// key=value file; '#' starts a comment line.
void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw IoError("config: line " + std::to_string(line_no) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "mode") {
      if (value != "dynamic" && value != "static") throw IoError("config: invalid mode: " + value);
      config.mode = value == "dynamic" ? SemanticsMode::Dynamic : SemanticsMode::Static;
    } else if (key == "backend") {
      if (value != "counting" && value != "trace") throw IoError("config: invalid backend: " + value);
      config.backend = value == "counting" ? ProbBackend::Counting : ProbBackend::Trace;
    } else if (key == "output") {
      if (value != "json" && value != "text") throw IoError("config: invalid output: " + value);
      config.output = value == "json" ? OutputFormat::Json : OutputFormat::Text;
    } else if (key == "weighting") {
      if (value != "by-tokens" && value != "uniform") throw IoError("config: invalid weighting: " + value);
      config.weighting = value == "by-tokens" ? CollectionWeighting::ByTokens
                                              : CollectionWeighting::Uniform;
    } else if (key == "lowercase") {
      config.tokenizer.lowercase = parse_bool(value, key);
    } else if (key == "strip_punctuation") {
      config.tokenizer.strip_punctuation = parse_bool(value, key);
    } else if (key == "splitter") {
      if (value == "whitespace-punct") {
        config.tokenizer.splitter = SplitRule::WhitespaceAndPunctuation;
      } else if (value == "whitespace") {
        config.tokenizer.splitter = SplitRule::Whitespace;
      } else {
        throw IoError("config: invalid splitter: " + value);
      }
    } else {
      throw IoError("config: line " + std::to_string(line_no) + ": unknown key: " + key);
    }
  }
}

std::string normalized_term_or_fail(const std::string& raw, const TokenizerConfig& tokenizer) {
  const std::string term = normalize_term(raw, tokenizer);
  if (term.empty()) {
    throw ParseError(0, "term", "term '" + raw + "' does not normalize to a single token");
  }
  return term;
}

void emit(std::ostream& out, const RunConfig& config, const json& report,
          const std::string& text_view) {
  if (config.output == OutputFormat::Json) {
    out << report.dump(2) << '\n';
  } else {
    out << text_view;
  }
}

// ---------------------------------------------------------------------------
// Subcommand implementations
// ---------------------------------------------------------------------------

void cmd_tokenize(const RunConfig& config, const DocSourceOpts& src, std::ostream& out) {
  const Document doc = resolve_document(src, config.tokenizer);
  json results{{"id", doc.id},
               {"count", doc.token_count()},
               {"tokens", doc.tokens}};
  std::ostringstream text;
  text << render(doc, RenderStyle::Compact) << '\n'
       << "tokens: " << doc.token_count() << '\n';
  emit(out, config, make_report(config.mode, config.backend, "tokenize", results), text.str());
}

void cmd_apply(const RunConfig& config, const std::string& expr_text,
               const DocSourceOpts& src, std::ostream& out) {
  const Pipeline pipeline = parse_pipeline(expr_text, config.tokenizer);
  const Document doc = resolve_document(src, config.tokenizer);
  const Document result = apply_pipeline(pipeline, doc, config.mode);
  json results{{"id", result.id},
               {"alive_count", alive_count(result)},
               {"compact", render(result, RenderStyle::Compact)},
               {"placeholder", render(result, RenderStyle::Placeholder)}};
  std::ostringstream text;
  text << render(result, RenderStyle::Placeholder) << '\n'
       << render(result, RenderStyle::Compact) << '\n'
       << "alive: " << alive_count(result) << '\n';
  emit(out, config,
       make_report(config.mode, config.backend, format_pipeline(pipeline), std::move(results)),
       text.str());
}

void cmd_relate(const RunConfig& config, const std::string& e1_text,
                const std::string& e2_text, const DocSourceOpts& src, std::ostream& out) {
  const EraserExpr e1 = parse_expr(e1_text, config.tokenizer);
  const EraserExpr e2 = parse_expr(e2_text, config.tokenizer);
  const Corpus corpus = resolve_corpus(src, config.tokenizer);
  const RelationReport report = corpus_relation(e1, e2, corpus, config.mode);
  const std::string query = format_expr(e1) + " vs " + format_expr(e2);

  std::ostringstream text;
  bool commutes_all = true;
  for (const DocVerdict& v : report.verdicts) {
    commutes_all = commutes_all && v.commutes;
    text << v.doc_id << ": geq=" << (v.geq ? "true" : "false")
         << " leq=" << (v.leq ? "true" : "false")
         << " commutes=" << (v.commutes ? "true" : "false")
         << " vacuous=" << (v.vacuous ? "true" : "false") << '\n';
  }
  text << "corpus: geq=" << (report.corpus_geq ? "true" : "false")
       << " leq=" << (report.corpus_leq ? "true" : "false")
       << " incompatible=" << (report.corpus_incompatible ? "true" : "false") << '\n';
  text << "commutation: " << (commutes_all ? "all documents commute" : "order matters on some documents")
       << '\n';
  emit(out, config, make_report(config.mode, config.backend, query, json(report)), text.str());
}

void cmd_cluster(const RunConfig& config, const std::string& e1_text,
                 const std::string& e2_text, const DocSourceOpts& src, std::ostream& out) {
  const EraserExpr e1 = parse_expr(e1_text, config.tokenizer);
  const EraserExpr e2 = parse_expr(e2_text, config.tokenizer);
  const Corpus corpus = resolve_corpus(src, config.tokenizer);
  const ClusterPartition partition = cluster_by_relation(e1, e2, corpus, config.mode);
  const std::string query = format_expr(e1) + " >= " + format_expr(e2);

  auto join = [](const std::vector<std::string>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) s += ' ';
      s += ids[i];
    }
    return s;
  };
  std::ostringstream text;
  text << "holds: " << join(partition.holds) << '\n'
       << "holds_vacuously: " << join(partition.holds_vacuously) << '\n'
       << "fails: " << join(partition.fails) << '\n';
  emit(out, config, make_report(config.mode, config.backend, query, json(partition)), text.str());
}

void cmd_measure(const RunConfig& config, const std::string& kind,
                 const std::vector<std::string>& args, const DocSourceOpts& src,
                 std::ostream& out) {
  const Corpus corpus = resolve_corpus(src, config.tokenizer);
  const auto& tokenizer = config.tokenizer;
  json results;
  std::ostringstream text;

  auto expect_args = [&](std::size_t n, const char* usage) {
    if (args.size() != n) throw CLI::ValidationError(std::string("measure ") + usage);
  };

  if (kind == "tf") {
    expect_args(1, "tf <term>");
    const std::string term = normalized_term_or_fail(args[0], tokenizer);
    std::vector<std::size_t> counts(corpus.docs.size());
    for_each_index(corpus.docs.size(), Execution::Parallel, [&](std::size_t i) {
      counts[i] = term_frequency(term, corpus.docs[i]);
    });
    json per_doc = json::object();
    std::size_t total = 0;
    for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
      per_doc[corpus.docs[i].id] = counts[i];
      total += counts[i];
      text << corpus.docs[i].id << ": " << counts[i] << '\n';
    }
    text << "total: " << total << '\n';
    results = json{{"kind", "tf"}, {"term", term}, {"per_doc", per_doc}, {"total", total}};
  } else if (kind == "bow") {
    expect_args(0, "bow");
    json per_doc = json::object();
    std::map<std::string, std::size_t> total;
    for (const Document& doc : corpus.docs) {
      const auto bow = bag_of_words(doc);
      per_doc[doc.id] = bow;
      for (const auto& [term, count] : bow) total[term] += count;
    }
    for (const auto& [term, count] : total) text << term << ": " << count << '\n';
    results = json{{"kind", "bow"}, {"per_doc", per_doc}, {"total", total}};
  } else if (kind == "cooc") {
    expect_args(3, "cooc <wide-term> <counted-term> <width>");
    CoocQuery query;
    query.wide_term = normalized_term_or_fail(args[0], tokenizer);
    query.counted_term = normalized_term_or_fail(args[1], tokenizer);
    try {
      std::size_t pos = 0;
      const long long w = std::stoll(args[2], &pos);
      if (pos != args[2].size() || w < 0) throw std::invalid_argument(args[2]);
      query.halfwidth = static_cast<std::size_t>(w);
    } catch (const std::exception&) {
      throw ParseError(0, "nonnegative integer", "width must be a nonnegative integer");
    }
    std::vector<std::size_t> counts(corpus.docs.size());
    for_each_index(corpus.docs.size(), Execution::Parallel, [&](std::size_t i) {
      counts[i] = cooccurrence(query, corpus.docs[i]);
    });
    json per_doc = json::object();
    std::size_t total = 0;
    for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
      per_doc[corpus.docs[i].id] = counts[i];
      total += counts[i];
      text << corpus.docs[i].id << ": " << counts[i] << '\n';
    }
    text << "total: " << total << '\n';
    results = json{{"kind", "cooc"},
                   {"wide", query.wide_term},
                   {"counted", query.counted_term},
                   {"width", query.halfwidth},
                   {"per_doc", per_doc},
                   {"total", total}};
  } else if (kind == "ortho") {
    expect_args(2, "ortho <term1> <term2>");
    const std::string t1 = normalized_term_or_fail(args[0], tokenizer);
    const std::string t2 = normalized_term_or_fail(args[1], tokenizer);
    std::vector<char> flags(corpus.docs.size());
    for_each_index(corpus.docs.size(), Execution::Parallel, [&](std::size_t i) {
      flags[i] = orthogonality_check(t1, t2, corpus.docs[i]) ? 1 : 0;
    });
    json per_doc = json::object();
    bool all = true;
    for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
      const bool orthogonal = flags[i] != 0;
      per_doc[corpus.docs[i].id] = orthogonal;
      all = all && orthogonal;
      text << corpus.docs[i].id << ": " << (orthogonal ? "true" : "false") << '\n';
    }
    text << "all: " << (all ? "true" : "false") << '\n';
    results = json{{"kind", "ortho"}, {"t1", t1}, {"t2", t2}, {"per_doc", per_doc}, {"all", all}};
  } else {
    throw CLI::ValidationError("unknown measure kind: " + kind +
                               " (expected tf, bow, cooc or ortho)");
  }

  std::string query_text = "measure " + kind;
  for (const auto& a : args) query_text += " " + a;
  emit(out, config, make_report(config.mode, config.backend, query_text, std::move(results)),
       text.str());
}

void cmd_prob(const RunConfig& config, const std::string& expr_text, bool implication,
              const std::string& e1_text, const std::string& e2_text,
              const DocSourceOpts& src, std::ostream& out) {
  json results;
  std::string query_text;
  ProbResult prob;

  const bool on_corpus = !src.corpus_path.empty();
  if (implication) {
    if (e1_text.empty() || e2_text.empty()) {
      throw CLI::ValidationError("--implication requires --e1 and --e2");
    }
    if (!expr_text.empty()) {
      throw CLI::ValidationError("--implication takes --e1/--e2, not a positional expression");
    }
    if (on_corpus) {
      throw CLI::ValidationError("implication queries take a single document (--doc or --text)");
    }
    const EraserExpr e1 = parse_expr(e1_text, config.tokenizer);
    const EraserExpr e2 = parse_expr(e2_text, config.tokenizer);
    const Document doc = resolve_document(src, config.tokenizer);
    prob = prob_implication(e1, e2, doc, config.backend);
    query_text = format_expr(e1) + " > " + format_expr(e2);
    results = json{{"kind", "implication"}, {"scope", "document"}};
  } else {
    if (expr_text.empty()) throw CLI::ValidationError("prob requires an expression");
    Pipeline pipeline = parse_pipeline(expr_text, config.tokenizer);
    query_text = format_pipeline(pipeline);
    if (pipeline.steps.size() == 1) {
      const EraserExpr expr = pipeline.steps.front();
      if (on_corpus) {
        const Corpus corpus = resolve_corpus(src, config.tokenizer);
        prob = prob_collection(expr, corpus, config.backend, config.weighting);
        results = json{{"kind", "plain"},
                       {"scope", "collection"},
                       {"weighting", to_string(config.weighting)}};
      } else {
        const Document doc = resolve_document(src, config.tokenizer);
        prob = prob_doc(expr, doc, config.backend);
        results = json{{"kind", "plain"}, {"scope", "document"}};
      }
    } else {
      if (on_corpus) {
        throw CLI::ValidationError("conditional queries take a single document (--doc or --text)");
      }
      const EraserExpr target = pipeline.steps.back();
      pipeline.steps.pop_back();
      const Document doc = resolve_document(src, config.tokenizer);
      prob = prob_conditional(target, pipeline, doc, config.backend);
      results = json{{"kind", "conditional"}, {"scope", "document"}};
    }
  }

  results["value"] = prob.value;
  if (prob.exact) results["exact"] = *prob.exact;

  std::ostringstream text;
  text << prob.value;
  if (prob.exact) text << " (" << prob.exact->num << "/" << prob.exact->den << ")";
  text << '\n';
  emit(out, config, make_report(config.mode, config.backend, query_text, std::move(results)),
       text.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Selective-eraser text analysis toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  std::string config_path;
  std::string mode_flag;
  std::string backend_flag;
  std::string output_flag;
  std::string weighting_flag;
  std::string splitter_flag;
  bool no_lowercase = false;
  bool keep_punctuation = false;

  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--mode", mode_flag, "Eraser semantics: dynamic (default) or static")
      ->check(CLI::IsMember({"dynamic", "static"}));
  app.add_option("--backend", backend_flag, "Probability backend: counting (default) or trace")
      ->check(CLI::IsMember({"counting", "trace"}));
  app.add_option("--output", output_flag, "Report format: json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--weighting", weighting_flag,
                 "Collection mixture weights: by-tokens (default) or uniform")
      ->check(CLI::IsMember({"by-tokens", "uniform"}));
  app.add_flag("--no-lowercase", no_lowercase, "Keep the original letter case");
  app.add_flag("--keep-punctuation", keep_punctuation, "Keep punctuation characters");
  app.add_option("--splitter", splitter_flag, "Token splitter: whitespace-punct (default) or whitespace")
      ->check(CLI::IsMember({"whitespace-punct", "whitespace"}));

  DocSourceOpts src;

  auto* tokenize_cmd = app.add_subcommand("tokenize", "Tokenize a document and print the tokens");
  tokenize_cmd->fallthrough();
  add_source_options(tokenize_cmd, src);

  std::string apply_expr_text;
  auto* apply_cmd = app.add_subcommand("apply", "Apply an eraser expression or pipeline");
  apply_cmd->fallthrough();
  apply_cmd->add_option("expr", apply_expr_text, "Eraser expression or '->' pipeline")->required();
  add_source_options(apply_cmd, src);

  std::string e1_text, e2_text;
  auto* relate_cmd = app.add_subcommand("relate", "Order/compatibility relation over a corpus");
  relate_cmd->fallthrough();
  relate_cmd->add_option("e1", e1_text, "Left eraser expression")->required();
  relate_cmd->add_option("e2", e2_text, "Right eraser expression")->required();
  add_source_options(relate_cmd, src);

  auto* cluster_cmd = app.add_subcommand("cluster", "Partition a corpus by e1 >= e2");
  cluster_cmd->fallthrough();
  cluster_cmd->add_option("e1", e1_text, "Left eraser expression")->required();
  cluster_cmd->add_option("e2", e2_text, "Right eraser expression")->required();
  add_source_options(cluster_cmd, src);

  std::string measure_kind;
  std::vector<std::string> measure_args;
  auto* measure_cmd = app.add_subcommand("measure", "Lexical measurements: tf, bow, cooc, ortho");
  measure_cmd->fallthrough();
  measure_cmd->add_option("kind", measure_kind, "tf | bow | cooc | ortho")->required();
  measure_cmd->add_option("args", measure_args, "Measurement arguments");
  add_source_options(measure_cmd, src);

  std::string prob_expr_text;
  bool implication = false;
  std::string prob_e1_text, prob_e2_text;
  auto* prob_cmd = app.add_subcommand("prob", "Probability of an eraser query");
  prob_cmd->fallthrough();
  prob_cmd->add_option("expr", prob_expr_text, "Expression, or pipeline for a conditional");
  prob_cmd->add_flag("--implication", implication, "Evaluate P(e1 > e2 | D)");
  prob_cmd->add_option("--e1", prob_e1_text, "Implication antecedent");
  prob_cmd->add_option("--e2", prob_e2_text, "Implication consequent");
  add_source_options(prob_cmd, src);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (!config_path.empty()) apply_config_file(config_path, config);
    if (!mode_flag.empty()) {
      config.mode = mode_flag == "dynamic" ? SemanticsMode::Dynamic : SemanticsMode::Static;
    }
    if (!backend_flag.empty()) {
      config.backend = backend_flag == "counting" ? ProbBackend::Counting : ProbBackend::Trace;
    }
    if (!output_flag.empty()) {
      config.output = output_flag == "json" ? OutputFormat::Json : OutputFormat::Text;
    }
    if (!weighting_flag.empty()) {
      config.weighting = weighting_flag == "by-tokens" ? CollectionWeighting::ByTokens
                                                       : CollectionWeighting::Uniform;
    }
    if (no_lowercase) config.tokenizer.lowercase = false;
    if (keep_punctuation) config.tokenizer.strip_punctuation = false;
    if (!splitter_flag.empty()) {
      config.tokenizer.splitter = splitter_flag == "whitespace"
                                      ? SplitRule::Whitespace
                                      : SplitRule::WhitespaceAndPunctuation;
    }
    if (app.got_subcommand(tokenize_cmd)) {
      cmd_tokenize(config, src, out);
    } else if (app.got_subcommand(apply_cmd)) {
      cmd_apply(config, apply_expr_text, src, out);
    } else if (app.got_subcommand(relate_cmd)) {
      cmd_relate(config, e1_text, e2_text, src, out);
    } else if (app.got_subcommand(cluster_cmd)) {
      cmd_cluster(config, e1_text, e2_text, src, out);
    } else if (app.got_subcommand(measure_cmd)) {
      cmd_measure(config, measure_kind, measure_args, src, out);
    } else if (app.got_subcommand(prob_cmd)) {
      cmd_prob(config, prob_expr_text, implication, prob_e1_text, prob_e2_text, src, out);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UndefinedProbability& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace eraskit
