#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace permlens {

// Identity of a tracked reference. Fields are global reference variables
// (one abstract object per declared field); locals of the entry point that
// hold freshly created objects are promoted to globals as well.
struct RefId {
  enum class Scope : std::uint8_t { Field, MainLocal, Local };

  Scope scope = Scope::Field;
  std::string owner;  // class name for fields, method id otherwise
  std::string name;

  static RefId field(std::string cls, std::string name) {
    return RefId{Scope::Field, std::move(cls), std::move(name)};
  }
  static RefId main_local(std::string method, std::string name) {
    return RefId{Scope::MainLocal, std::move(method), std::move(name)};
  }
  static RefId local(std::string method, std::string name) {
    return RefId{Scope::Local, std::move(method), std::move(name)};
  }

  bool is_grv() const { return scope != Scope::Local; }
  // "AC.array1", "main:obj1", "m/1:t"
  std::string key() const {
    switch (scope) {
      case Scope::Field: return owner + "." + name;
      case Scope::MainLocal: return owner + "!" + name;
      case Scope::Local: return owner + ":" + name;
    }
    return name;
  }

  auto operator<=>(const RefId&) const = default;
  bool operator==(const RefId&) const = default;
};

}  // namespace permlens
