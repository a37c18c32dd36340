#pragma once

#define ARBOR_VERSION "0.1.0"
