#include <iostream>

int main() {
    std::cout << "ripsnet\n";
    return 0;
}
