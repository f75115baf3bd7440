# integration tests package