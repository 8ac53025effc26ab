#include <iostream>

int main() {
    std::cout << "charvar cli placeholder\n";
    return 0;
}
