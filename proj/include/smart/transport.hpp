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

#ifndef SMART_TRANSPORT_HPP_
#define SMART_TRANSPORT_HPP_

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "smart/errors.hpp"

namespace smart {

struct TransportRequest {
  std::string url;
  int timeoutMs = 10000;
};

struct TransportResponse {
  int status = 0;
  std::string contentType;
  std::string body;
};

class TransportError : public Error {
 public:
  TransportError(const std::string& url, int status, const std::string& message)
      : Error("TransportError", message,
              {{"url", url}, {"status", std::to_string(status)}}) {}
};

/// HTTP GET. Implementations throw TransportError for connection failures;
/// non-2xx statuses are returned, not thrown.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual TransportResponse get(const TransportRequest& request) = 0;
};

/// Plain-HTTP client: at most 3 redirects, body capped at 8 MiB.
class HttpTransport : public Transport {
 public:
  static constexpr std::size_t kMaxBody = 8u << 20;
  TransportResponse get(const TransportRequest& request) override;
};

/// Canned responses keyed by exact URL; unknown URLs get a 404.
class FakeTransport : public Transport {
 public:
  void set(const std::string& url, TransportResponse response);
  TransportResponse get(const TransportRequest& request) override;
  std::vector<std::string> requests() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, TransportResponse> responses_;
  std::vector<std::string> requests_;
};

}  // namespace smart

#endif  // SMART_TRANSPORT_HPP_
