#include "cocite/article_ref.hpp"

#include <cctype>

#include "cocite/error.hpp"

namespace cocite {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool has_interior_space(std::string_view s) {
  for (const char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

[[noreturn]] void fail(std::string_view raw, const char* why) {
  throw ParseError("bad article ref \"" + std::string(raw) + "\": " + why);
}

}  // namespace

ArticleRef parse_article_ref(std::string_view raw) {
  const auto first = raw.find('/');
  if (first == std::string_view::npos) fail(raw, "missing '/' separator");
  if (raw.find('/', first + 1) != std::string_view::npos) {
    fail(raw, "more than one '/' separator");
  }

  const std::string_view code = trim(raw.substr(0, first));
  const std::string_view article = trim(raw.substr(first + 1));
  if (code.empty()) fail(raw, "empty code id");
  if (article.empty()) fail(raw, "empty article id");
  if (has_interior_space(code)) fail(raw, "whitespace inside code id");
  if (has_interior_space(article)) fail(raw, "whitespace inside article id");

  ArticleRef ref;
  ref.code_id.reserve(code.size());
  for (const char c : code) {
    ref.code_id.push_back(
        static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  ref.article_id.assign(article);
  return ref;
}

std::string to_string(const ArticleRef& a) {
  return a.code_id + "/" + a.article_id;
}

}  // namespace cocite
