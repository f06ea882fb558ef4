#include <cstdio>
int main() { std::puts("liestar cli placeholder"); return 0; }
