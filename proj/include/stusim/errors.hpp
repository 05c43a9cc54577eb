#pragma once

#include <stdexcept>
#include <string>

namespace stusim {

// Line-addressed failure while reading a jsonl or config file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, int line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

// A record references an id that does not exist in the dataset.
class ReferentialError : public std::runtime_error {
 public:
  ReferentialError(std::string dangling_id, const std::string& what)
      : std::runtime_error(what), dangling_id_(std::move(dangling_id)) {}
  const std::string& dangling_id() const { return dangling_id_; }

 private:
  std::string dangling_id_;
};

// A record violates a structural invariant; message names the record.
class InvariantError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pipeline stage failure wrapper; names the stage that aborted.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what)
      : std::runtime_error("stage '" + stage + "': " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

class BackendError : public std::runtime_error {
 public:
  BackendError(std::string request_id, const std::string& what)
      : std::runtime_error(what + " [request " + request_id + "]"),
        request_id_(std::move(request_id)) {}
  const std::string& request_id() const { return request_id_; }

 private:
  std::string request_id_;
};

class BackendTransportError : public BackendError {
  using BackendError::BackendError;
};

class BackendHttpError : public BackendError {
 public:
  BackendHttpError(const std::string& request_id, int status, const std::string& what)
      : BackendError(request_id, what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

class BackendSchemaError : public BackendError {
  using BackendError::BackendError;
};

}  // namespace stusim
