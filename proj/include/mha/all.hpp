#pragma once

#include "suites.hpp"
