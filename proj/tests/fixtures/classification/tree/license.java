license.java
