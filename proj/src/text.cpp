#include "eraskit/text.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "eraskit/errors.hpp"

namespace eraskit {

namespace {

constexpr const char* kErasedMarker = "▯";  // ▯

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

// Bytes >= 0x80 (UTF-8 continuation/lead) are treated as word characters.
bool is_punct(unsigned char c) { return c < 0x80 && std::ispunct(c) != 0; }

std::string normalize_token(std::string token, const TokenizerConfig& config) {
  if (config.strip_punctuation) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return is_punct(c); }),
                token.end());
  }
  if (config.lowercase) {
    std::transform(token.begin(), token.end(), token.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  }
  return token;
}

std::vector<std::string> split(const std::string& text, const TokenizerConfig& config) {
  std::vector<std::string> raw;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      raw.push_back(std::move(current));
      current.clear();
    }
  };
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_space(c)) {
      flush();
    } else if (config.splitter == SplitRule::WhitespaceAndPunctuation && is_punct(c)) {
      // Punctuation ends the token; the punctuation character itself only
      // survives as its own token when strip_punctuation is off.
      flush();
      if (!config.strip_punctuation) raw.emplace_back(1, ch);
    } else {
      current.push_back(ch);
    }
  }
  flush();

  std::vector<std::string> tokens;
  tokens.reserve(raw.size());
  for (auto& token : raw) {
    std::string normalized = normalize_token(std::move(token), config);
    if (!normalized.empty()) tokens.push_back(std::move(normalized));
  }
  return tokens;
}

}  // namespace

Document tokenize(const std::string& text, const TokenizerConfig& config, std::string id) {
  return Document(std::move(id), split(text, config));
}

std::size_t alive_count(const Document& doc) { return doc.mask.count(); }

std::string render(const Document& doc, RenderStyle style) {
  std::string out;
  bool first = true;
  for (std::size_t pos = 0; pos < doc.tokens.size(); ++pos) {
    const bool alive = doc.mask.test(pos);
    if (style == RenderStyle::Compact && !alive) continue;
    if (!first) out += ' ';
    out += alive ? doc.tokens[pos] : kErasedMarker;
    first = false;
  }
  return out;
}

std::string normalize_term(const std::string& term, const TokenizerConfig& config) {
  const auto tokens = split(term, config);
  if (tokens.size() != 1) return {};
  return tokens.front();
}

Corpus make_corpus(std::vector<Document> docs) {
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  std::unordered_set<std::string> seen;
  Corpus corpus;
  for (auto& doc : docs) {
    if (!seen.insert(doc.id).second) {
      throw IoError("duplicate document id: " + doc.id);
    }
    corpus.total_tokens += doc.token_count();
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

namespace {

Corpus load_txt_dir(const std::string& path, const TokenizerConfig& config) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(path, ec)) {
    throw IoError("not a readable directory: " + path);
  }
  std::vector<Document> docs;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    std::ifstream in(entry.path());
    if (!in) throw IoError("cannot read file: " + entry.path().string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    docs.push_back(tokenize(buffer.str(), config, entry.path().stem().string()));
  }
  return make_corpus(std::move(docs));
}

Corpus load_jsonl(const std::string& path, const TokenizerConfig& config) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file: " + path);
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      throw IoError(path + ": line " + std::to_string(line_no) + ": malformed JSON record");
    }
    if (!record.contains("id") || !record["id"].is_string()) {
      throw IoError(path + ": line " + std::to_string(line_no) + ": missing string field \"id\"");
    }
    if (!record.contains("text") || !record["text"].is_string()) {
      throw IoError(path + ": line " + std::to_string(line_no) +
                    ": missing string field \"text\"");
    }
    docs.push_back(tokenize(record["text"].get<std::string>(), config,
                            record["id"].get<std::string>()));
  }
  return make_corpus(std::move(docs));
}

}  // namespace

Corpus load_corpus(const std::string& path, CorpusFormat format,
                   const TokenizerConfig& config) {
  return format == CorpusFormat::TxtDir ? load_txt_dir(path, config)
                                        : load_jsonl(path, config);
}

}  // namespace eraskit
