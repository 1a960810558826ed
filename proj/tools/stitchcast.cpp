#include <cstdio>

int main() {
    std::printf("stitchcast %s (cli under construction)\n", STITCHCAST_VERSION);
    return 0;
}
