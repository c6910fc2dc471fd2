#include <cstdio>
int main(){ std::puts("quintic"); return 0; }
