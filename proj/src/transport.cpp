/*
 * Copyright 2026 The smartmash Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "smart/transport.hpp"

#include <cctype>
#include <regex>

#include <httplib.h>

namespace smart {

TransportResponse HttpTransport::get(const TransportRequest& request) {
  static const std::regex kUrl(R"(^(https?)://([^/?#]+)([^#]*)(#.*)?$)",
                               std::regex::icase);
  std::smatch m;
  if (!std::regex_match(request.url, m, kUrl))
    throw TransportError(request.url, 0, "not an absolute http URL");
  std::string scheme = m[1].str();
  for (char& c : scheme) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (scheme != "http")
    throw TransportError(request.url, 0, "only plain http is supported");
  std::string target = m[3].str();
  if (target.empty()) target = "/";

  httplib::Client client("http://" + m[2].str());
  const auto seconds = request.timeoutMs / 1000;
  const auto micros = (request.timeoutMs % 1000) * 1000;
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);
  client.set_follow_location(true);

  std::string body;
  bool truncated = false;
  auto result = client.Get(
      target, httplib::Headers{},
      [&](const httplib::Response&) {
        body.clear();
        return true;
      },
      [&](const char* data, std::size_t len) {
        if (body.size() + len > kMaxBody) {
          truncated = true;
          return false;
        }
        body.append(data, len);
        return true;
      });
  if (truncated)
    throw TransportError(request.url, 0, "response body exceeds 8 MiB");
  if (!result)
    throw TransportError(request.url, 0,
                         "request failed: " + httplib::to_string(result.error()));
  TransportResponse out;
  out.status = result->status;
  out.contentType = result->get_header_value("Content-Type");
  out.body = std::move(body);
  return out;
}

void FakeTransport::set(const std::string& url, TransportResponse response) {
  std::lock_guard<std::mutex> lock(mu_);
  responses_[url] = std::move(response);
}

TransportResponse FakeTransport::get(const TransportRequest& request) {
  std::lock_guard<std::mutex> lock(mu_);
  requests_.push_back(request.url);
  auto it = responses_.find(request.url);
  if (it == responses_.end()) return {404, "text/plain", "not found"};
  return it->second;
}

std::vector<std::string> FakeTransport::requests() const {
  std::lock_guard<std::mutex> lock(mu_);
  return requests_;
}

}  // namespace smart
